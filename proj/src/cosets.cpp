#include "bch3/cosets.hpp"

#include <algorithm>

#include "bch3/errors.hpp"

namespace bch3 {

namespace {

// 3^12 - 1: bound for full-partition scans unless forced.
constexpr std::uint32_t kMaxScanN = 531440;

std::uint32_t reduce(std::int64_t s, std::uint32_t n) {
    std::int64_t r = s % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return static_cast<std::uint32_t>(r);
}

std::uint64_t pow3u(int m) {
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) p *= 3;
    return p;
}

} // namespace

Coset coset(std::int64_t s, std::uint32_t n) {
    if (n == 0) throw parameter_error("coset: n must be positive");
    const std::uint32_t s0 = reduce(s, n);
    Coset c;
    std::uint32_t k = s0;
    do {
        c.elements.push_back(k);
        k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * 3 % n);
    } while (k != s0);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    c.acl = n;
    for (std::uint32_t e : c.elements) c.acl = std::min({c.acl, e, n - e == n ? 0u : n - e});
    return c;
}

std::uint32_t absolute_coset_leader(std::int64_t s, std::uint32_t n) {
    const std::uint32_t s0 = reduce(s, n);
    std::uint32_t best = std::min(s0, s0 == 0 ? 0u : n - s0);
    std::uint32_t k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s0) * 3 % n);
    while (k != s0) {
        best = std::min({best, k, k == 0 ? 0u : n - k});
        k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * 3 % n);
    }
    return best;
}

std::vector<std::uint8_t> ternary_expansion(std::uint64_t i, int m) {
    if (m < 1 || i >= pow3u(m)) throw parameter_error("ternary_expansion: i out of range for m digits");
    std::vector<std::uint8_t> digits(m);
    for (int t = 0; t < m; ++t) {
        digits[t] = static_cast<std::uint8_t>(i % 3);
        i /= 3;
    }
    return digits;
}

AclTable acl_table(std::uint32_t n, bool force) {
    if (n == 0) throw parameter_error("acl_table: n must be positive");
    if (n > kMaxScanN && !force)
        throw capacity_error("acl_table: n exceeds the default scan bound (use force)");

    AclTable t;
    t.n = n;
    std::vector<bool> seen(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        Coset c = coset(s, n);
        for (std::uint32_t e : c.elements) seen[e] = true;
        t.cosets.push_back(std::move(c));
    }
    t.ranked_acls.reserve(t.cosets.size());
    for (const Coset& c : t.cosets) t.ranked_acls.push_back(c.acl);
    std::sort(t.ranked_acls.begin(), t.ranked_acls.end(), std::greater<>());
    t.ranked_acls.erase(std::unique(t.ranked_acls.begin(), t.ranked_acls.end()), t.ranked_acls.end());
    return t;
}

std::uint32_t delta_formula(int m, int rank) {
    if (m < 1) throw parameter_error("delta_formula: m must be positive");
    const std::uint64_t n = pow3u(m) - 1;
    switch (rank) {
        case 1:
            return static_cast<std::uint32_t>(n / 2);
        case 2:
            if (m % 2 == 1) {
                if (m < 3) throw parameter_error("delta_formula: rank 2 needs m >= 3 when m is odd");
                return static_cast<std::uint32_t>((pow3u(m - 1) - 1) / 4 + pow3u(m - 2));
            }
            return static_cast<std::uint32_t>(n / 4);
        case 3:
            if (m % 4 == 0 && m >= 4) return static_cast<std::uint32_t>(n / 5);
            if (m % 4 == 2 && m >= 6)
                return static_cast<std::uint32_t>((pow3u(m - 6) - 1) / 5 + pow3u(m - 6) +
                                                  2 * pow3u(m - 5) + 2 * pow3u(m - 3) + pow3u(m - 2));
            throw parameter_error("delta_formula: rank 3 has no closed form for m = " +
                                  std::to_string(m) + " (needs m = 0 mod 4, m >= 4, or m = 2 mod 4, m >= 6)");
        default:
            throw parameter_error("delta_formula: rank must be 1, 2 or 3");
    }
}

std::vector<AclRankEntry> top_acl_oracle(std::uint32_t n, int count, bool force) {
    if (count < 1) throw parameter_error("top_acl_oracle: count must be positive");
    AclTable t = acl_table(n, force);
    std::vector<AclRankEntry> out;
    for (std::uint32_t acl : t.ranked_acls) {
        if (static_cast<int>(out.size()) == count) break;
        AclRankEntry entry;
        entry.acl = acl;
        for (const Coset& c : t.cosets)
            if (c.acl == acl) entry.cosets.push_back(c);
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace bch3
