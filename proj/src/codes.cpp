#include "bch3/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bch3/errors.hpp"

namespace bch3 {

namespace {

std::uint64_t pow3u(int m) {
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) p *= 3;
    return p;
}

void mark_orbit(std::vector<bool>& mark, std::uint32_t s, std::uint32_t n) {
    std::uint32_t k = s % n;
    while (!mark[k]) {
        mark[k] = true;
        k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * 3 % n);
    }
}

// Union of C_s over the symmetric range |s| < t.
std::vector<bool> symmetric_union(std::uint32_t t, std::uint32_t n) {
    std::vector<bool> mark(n, false);
    for (std::uint32_t s = 0; s < t && s < n; ++s) {
        mark_orbit(mark, s, n);
        if (s != 0) mark_orbit(mark, n - s, n);
    }
    return mark;
}

std::vector<std::uint32_t> collect(const std::vector<bool>& mark) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::vector<bool> complement(const std::vector<bool>& mark) {
    std::vector<bool> out(mark.size());
    for (std::size_t i = 0; i < mark.size(); ++i) out[i] = !mark[i];
    return out;
}

void check_dimension(const CyclicCode& code, std::uint32_t expected) {
    if (code.dimension != expected)
        throw std::logic_error("construct_family: dimension " + std::to_string(code.dimension) +
                               " does not match the claimed " + std::to_string(expected));
}

} // namespace

Family family_from_char(char c) {
    if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw parameter_error("family must be one of A..G");
    return static_cast<Family>(c);
}

bool family_admissible(Family fam, int m) {
    switch (fam) {
        case Family::A: return m >= 3 && m % 2 == 1;
        case Family::B: return m >= 6 && m % 4 == 2;
        case Family::C: return m >= 6 && m % 4 == 2;
        case Family::D: return m >= 1;
        case Family::E: return m >= 3 && m % 2 == 1;
        case Family::F: return m >= 2 && m % 2 == 0;
        case Family::G: return m >= 6 && m % 4 == 2;
    }
    return false;
}

std::string family_admissibility_text(Family fam) {
    switch (fam) {
        case Family::A: return "m odd, m >= 3";
        case Family::B: return "m = 2 (mod 4), m >= 6";
        case Family::C: return "m = 2 (mod 4), m >= 6";
        case Family::D: return "m >= 1";
        case Family::E: return "m odd, m >= 3";
        case Family::F: return "m even, m >= 2";
        case Family::G: return "m = 2 (mod 4), m >= 6";
    }
    return "";
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
}

std::optional<std::uint32_t> WeightDistribution::min_positive() const {
    for (auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return std::nullopt;
}

std::string WeightDistribution::enumerator_string() const {
    std::string s;
    for (auto& [w, c] : counts) {
        if (c == 0) continue;
        if (w == 0) {
            s += std::to_string(c);
        } else {
            if (!s.empty()) s += "+";
            s += std::to_string(c) + "z^" + std::to_string(w);
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<std::uint32_t> canonicalize_residues(const std::vector<std::int64_t>& z, std::uint32_t n) {
    std::vector<std::uint32_t> out;
    out.reserve(z.size());
    for (std::int64_t s : z) {
        std::int64_t r = s % static_cast<std::int64_t>(n);
        if (r < 0) r += n;
        out.push_back(static_cast<std::uint32_t>(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_coset_closed(const std::vector<std::uint32_t>& z, std::uint32_t n) {
    for (std::uint32_t i : z) {
        std::uint32_t next = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) * 3 % n);
        if (!std::binary_search(z.begin(), z.end(), next)) return false;
    }
    return true;
}

bool is_negation_closed(const std::vector<std::uint32_t>& z, std::uint32_t n) {
    for (std::uint32_t i : z)
        if (!std::binary_search(z.begin(), z.end(), i == 0 ? 0 : n - i)) return false;
    return true;
}

Poly3 generator_from_defining_set(const std::vector<std::uint32_t>& z, const FieldContext& f) {
    if (!std::is_sorted(z.begin(), z.end()))
        throw parameter_error("generator_from_defining_set: residues must be sorted");
    if (!is_coset_closed(z, f.n()))
        throw parameter_error("generator_from_defining_set: defining set is not a union of cosets");

    std::set<std::uint32_t> leaders;
    for (std::uint32_t i : z) leaders.insert(coset(i, f.n()).leader);

    Poly3 g = Poly3::one();
    for (std::uint32_t leader : leaders) g = g * minimal_polynomial(f, f.alpha_pow(leader));
    if (g.degree() != static_cast<int>(z.size()))
        throw std::logic_error("generator degree does not match the defining-set size");
    return g;
}

CyclicCode code_from_defining_set(const std::vector<std::int64_t>& z, const FieldContext& f) {
    CyclicCode code;
    code.n = f.n();
    code.m = f.m();
    code.defining_set = canonicalize_residues(z, f.n());
    code.generator = generator_from_defining_set(code.defining_set, f);
    auto [h, rem] = poly_divmod(Poly3::x_pow_n_minus_1(f.n()), code.generator);
    if (!rem.is_zero()) throw std::logic_error("generator does not divide x^n - 1");
    code.parity_check = std::move(h);
    code.dimension = f.n() - static_cast<std::uint32_t>(code.defining_set.size());
    return code;
}

CyclicCode construct_family(Family fam, const FieldContext& f) {
    const int m = f.m();
    if (!family_admissible(fam, m))
        throw parameter_error("family " + std::string(1, static_cast<char>(fam)) +
                              " requires " + family_admissibility_text(fam));
    const std::uint32_t n = f.n();
    const std::uint32_t d1 = delta_formula(m, 1);

    std::vector<bool> mark;
    std::uint64_t designed = 0;
    std::uint32_t expected_dim = 0;

    // A, B and C keep exactly the complement of the reciprocal coset of the
    // relevant delta (plus C_{delta_1} in C's case), matching their
    // parity-check polynomials; the symmetric-range families D, E, F, G are
    // built directly from their stated ranges.
    switch (fam) {
        case Family::A: {
            const std::uint32_t d2 = delta_formula(m, 2);
            std::vector<bool> excl(n, false);
            mark_orbit(excl, n - d2, n);
            mark = complement(excl);
            designed = static_cast<std::uint64_t>(d1) + d2 + 1;
            expected_dim = static_cast<std::uint32_t>(m);
            break;
        }
        case Family::B: {
            const std::uint32_t d3 = delta_formula(m, 3);
            std::vector<bool> excl(n, false);
            mark_orbit(excl, n - d3, n);
            mark = complement(excl);
            designed = static_cast<std::uint64_t>(d1) + d3 + 1;
            expected_dim = static_cast<std::uint32_t>(m);
            break;
        }
        case Family::C: {
            const std::uint32_t d3 = delta_formula(m, 3);
            std::vector<bool> excl(n, false);
            mark_orbit(excl, n - d3, n);
            mark_orbit(excl, d1, n);
            mark = complement(excl);
            designed = static_cast<std::uint64_t>(d1) + d3;
            expected_dim = static_cast<std::uint32_t>(m) + 1;
            break;
        }
        case Family::D: {
            mark = symmetric_union(d1, n);
            designed = 2ull * d1;
            expected_dim = 1;
            break;
        }
        case Family::E: {
            const std::uint32_t d2 = delta_formula(m, 2);
            mark = symmetric_union(d2, n);
            mark_orbit(mark, d1, n);
            designed = 2ull * d2;
            expected_dim = 2u * static_cast<std::uint32_t>(m);
            break;
        }
        case Family::F: {
            const std::uint32_t d2 = delta_formula(m, 2);
            mark = symmetric_union(d2, n);
            designed = 2ull * d2;
            expected_dim = 3;
            break;
        }
        case Family::G: {
            const std::uint32_t d3 = delta_formula(m, 3);
            const std::uint32_t d2 = delta_formula(m, 2);
            mark = symmetric_union(d3, n);
            mark_orbit(mark, d1, n);
            mark_orbit(mark, d2, n);
            designed = 2ull * d3;
            expected_dim = 2u * static_cast<std::uint32_t>(m);
            break;
        }
    }

    std::vector<std::uint32_t> z = collect(mark);
    std::vector<std::int64_t> z64(z.begin(), z.end());
    CyclicCode code = code_from_defining_set(z64, f);
    code.designed_distance = designed;
    code.family = fam;
    check_dimension(code, expected_dim);
    return code;
}

bool has_closed_form(Family fam) {
    return fam == Family::A || fam == Family::B || fam == Family::C || fam == Family::D ||
           fam == Family::F;
}

bool has_trace_form(Family fam) { return fam != Family::D; }

WeightDistribution closed_form_distribution(Family fam, int m) {
    if (!family_admissible(fam, m))
        throw parameter_error("family " + std::string(1, static_cast<char>(fam)) +
                              " requires " + family_admissibility_text(fam));
    const std::uint64_t q = pow3u(m);
    const std::uint64_t n = q - 1;
    WeightDistribution wd;
    wd.counts[0] = 1;
    switch (fam) {
        case Family::A:
            wd.counts[static_cast<std::uint32_t>(2 * (q / 3))] = n;
            break;
        case Family::B: {
            const std::uint64_t root = pow3u(m / 2);
            wd.counts[static_cast<std::uint32_t>(2 * (q - root) / 3)] = n / 2;
            wd.counts[static_cast<std::uint32_t>(2 * (q + root) / 3)] = n / 2;
            break;
        }
        case Family::C: {
            const std::uint64_t root = pow3u(m / 2);
            wd.counts[static_cast<std::uint32_t>(2 * (q - root) / 3)] = n / 2;
            wd.counts[static_cast<std::uint32_t>((2 * q - root) / 3 - 1)] = n;
            wd.counts[static_cast<std::uint32_t>((2 * q + root) / 3 - 1)] = n;
            wd.counts[static_cast<std::uint32_t>(2 * (q + root) / 3)] = n / 2;
            wd.counts[static_cast<std::uint32_t>(n)] = 2;
            break;
        }
        case Family::D:
            wd.counts[static_cast<std::uint32_t>(n)] = 2;
            break;
        case Family::F:
            wd.counts[static_cast<std::uint32_t>(n / 2)] = 12;
            wd.counts[static_cast<std::uint32_t>(3 * n / 4)] = 8;
            wd.counts[static_cast<std::uint32_t>(n)] = 6;
            break;
        default:
            throw parameter_error("family " + std::string(1, static_cast<char>(fam)) +
                                  " has no closed-form weight distribution");
    }
    return wd;
}

std::optional<std::uint32_t> minimum_distance(const WeightDistribution& wd) {
    return wd.min_positive();
}

bool is_lcd(const CyclicCode& code) { return is_self_reciprocal(code.generator); }

CyclicCode dual(const CyclicCode& code) {
    CyclicCode d;
    d.n = code.n;
    d.m = code.m;
    d.generator = reciprocal(code.parity_check);
    d.parity_check = reciprocal(code.generator);
    d.dimension = code.n - code.dimension;

    std::vector<bool> in_z(code.n, false);
    for (std::uint32_t i : code.defining_set) in_z[i] = true;
    for (std::uint32_t i = 0; i < code.n; ++i)
        if (!in_z[i]) d.defining_set.push_back(i == 0 ? 0 : code.n - i);
    std::sort(d.defining_set.begin(), d.defining_set.end());
    return d;
}

std::uint32_t intersection_dimension(const CyclicCode& a, const CyclicCode& b) {
    if (a.n != b.n) throw parameter_error("intersection_dimension: length mismatch");
    Poly3 l = poly_lcm(a.generator, b.generator);
    return a.n - static_cast<std::uint32_t>(l.degree());
}

BchBoundReport verify_bch_bound(const CyclicCode& code, const WeightDistribution& wd) {
    BchBoundReport r;
    std::vector<bool> in_z(code.n, false);
    for (std::uint32_t i : code.defining_set) in_z[i] = true;

    // Longest circular run of consecutive residues inside Z.
    std::uint32_t best = 0, run = 0;
    for (std::uint32_t pass = 0; pass < 2; ++pass) {
        for (std::uint32_t i = 0; i < code.n; ++i) {
            if (in_z[i]) {
                run = std::min(run + 1, code.n);
                best = std::max(best, run);
            } else {
                run = 0;
            }
        }
        if (code.defining_set.size() == code.n) break; // full circle
    }
    r.longest_run = std::min(best, code.n);
    r.bound = r.longest_run + 1;
    auto d = wd.min_positive();
    r.min_distance = d.value_or(0);
    r.pass = d.has_value() && *d >= r.bound;
    return r;
}

} // namespace bch3
