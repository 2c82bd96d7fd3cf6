#pragma once

#include <stdexcept>
#include <string>

namespace bch3 {

// A request exceeds the configured table or enumeration limits.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or unsupported arguments: inadmissible m, mismatched field contexts,
// inversion of zero, defining sets that are not unions of cosets.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bch3
