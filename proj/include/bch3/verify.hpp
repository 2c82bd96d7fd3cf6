#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bch3/enumerate.hpp"

namespace bch3::verify {

enum class Scope { All, Section3, Section4, Examples };
Scope scope_from_string(const std::string& s);
std::string scope_to_string(Scope s);

enum class Status { Pass, Fail, Info };
std::string status_to_string(Status s);

struct CheckRecord {
    std::string id;
    std::string claim;
    std::string params;
    std::string expected;
    std::string actual;
    Status status = Status::Pass;
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckRecord> checks;
    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
};

struct Options {
    Scope scope = Scope::All;
    int max_m = 6;
    bool force = false;
    int workers = 0;
    std::uint32_t max_dim = kDefaultMaxDim;
};

// Runs every check in scope. Record content is deterministic and independent
// of the worker count; only the timing fields vary.
Report run(const Options& opt);

} // namespace bch3::verify
