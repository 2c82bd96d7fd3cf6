#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bch3/cosets.hpp"
#include "bch3/field.hpp"
#include "bch3/poly.hpp"

namespace bch3 {

// The code families built here, in the order they come up:
//   A  narrow exclusion of one coset around the second largest ACL; one-weight, m odd >= 3
//   B  same around the third largest ACL; two-weight, m = 2 mod 4, m >= 6
//   C  family B widened by the order-2 root; m = 2 mod 4, m >= 6
//   D  repetition-style LCD code, defining set everything but delta_1; any m
//   E  LCD code with symmetric defining set below delta_2 plus delta_1; m odd >= 3
//   F  LCD code with symmetric defining set below delta_2; m even >= 2
//   G  LCD code with symmetric defining set below delta_3 plus delta_1, delta_2; m = 2 mod 4, m >= 6
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
bool family_admissible(Family fam, int m);
std::string family_admissibility_text(Family fam);

struct CyclicCode {
    std::uint32_t n = 0;
    int m = 0;
    std::vector<std::uint32_t> defining_set; // sorted union of cosets
    Poly3 generator;
    Poly3 parity_check;
    std::uint32_t dimension = 0;
    std::optional<std::uint64_t> designed_distance;
    std::optional<Family> family;
};

// Weight -> number of codewords; includes A_0 = 1 whenever nonempty.
struct WeightDistribution {
    std::map<std::uint32_t, std::uint64_t> counts;

    std::uint64_t total() const;
    std::optional<std::uint32_t> min_positive() const;
    std::string enumerator_string() const; // "1+12z^40+8z^60+6z^80"
    bool operator==(const WeightDistribution&) const = default;
};

std::vector<std::uint32_t> canonicalize_residues(const std::vector<std::int64_t>& z, std::uint32_t n);
bool is_coset_closed(const std::vector<std::uint32_t>& z, std::uint32_t n);
bool is_negation_closed(const std::vector<std::uint32_t>& z, std::uint32_t n);

// Product of the distinct minimal polynomials of alpha^i over i in z;
// z must be a union of cosets.
Poly3 generator_from_defining_set(const std::vector<std::uint32_t>& z, const FieldContext& f);

CyclicCode code_from_defining_set(const std::vector<std::int64_t>& z, const FieldContext& f);
CyclicCode construct_family(Family fam, const FieldContext& f);

// The families with a stated closed-form distribution: A, B, C, D, F.
WeightDistribution closed_form_distribution(Family fam, int m);
bool has_closed_form(Family fam);
bool has_trace_form(Family fam);

std::optional<std::uint32_t> minimum_distance(const WeightDistribution& wd);

bool is_lcd(const CyclicCode& code);
CyclicCode dual(const CyclicCode& code);
// dim(C1 cap C2) = n - deg lcm(g1, g2).
std::uint32_t intersection_dimension(const CyclicCode& a, const CyclicCode& b);

struct BchBoundReport {
    std::uint32_t longest_run = 0; // longest circular run of consecutive residues in Z
    std::uint32_t bound = 0;       // longest_run + 1
    std::uint32_t min_distance = 0;
    bool pass = false;             // min_distance >= bound
};
BchBoundReport verify_bch_bound(const CyclicCode& code, const WeightDistribution& wd);

} // namespace bch3
