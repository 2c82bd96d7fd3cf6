#pragma once

#include <cstdint>
#include <vector>

namespace bch3 {

// A 3-cyclotomic coset mod n: the orbit of s under multiplication by 3,
// together with its leader and absolute coset leader
// acl = min{k, n-k : k in elements}.
struct Coset {
    std::vector<std::uint32_t> elements; // ascending
    std::uint32_t leader = 0;
    std::uint32_t acl = 0;
    std::uint32_t size() const { return static_cast<std::uint32_t>(elements.size()); }
};

// s is reduced mod n first, so negative indices are fine.
Coset coset(std::int64_t s, std::uint32_t n);
std::uint32_t absolute_coset_leader(std::int64_t s, std::uint32_t n);

// Digits (i_0, ..., i_{m-1}) with i = sum i_t 3^t; requires i < 3^m.
std::vector<std::uint8_t> ternary_expansion(std::uint64_t i, int m);

// The full coset partition of Z_n plus the distinct ACL values in
// descending order. Built by exhaustive scan.
struct AclTable {
    std::uint32_t n = 0;
    std::vector<Coset> cosets;              // sorted by leader
    std::vector<std::uint32_t> ranked_acls; // distinct, descending
};
AclTable acl_table(std::uint32_t n, bool force = false);

// Closed forms for the largest (rank 1), second largest (rank 2) and third
// largest (rank 3) absolute coset leader mod 3^m - 1. Rank 2 splits on the
// parity of m; rank 3 exists only for m = 0 (mod 4), m >= 4 and
// m = 2 (mod 4), m >= 6.
std::uint32_t delta_formula(int m, int rank);

// The k largest distinct ACL values with every coset attaining each, by
// full scan, independent of delta_formula.
struct AclRankEntry {
    std::uint32_t acl = 0;
    std::vector<Coset> cosets; // sorted by leader
};
std::vector<AclRankEntry> top_acl_oracle(std::uint32_t n, int count, bool force = false);

} // namespace bch3
