#include "bch3/charsums.hpp"

#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bch3/errors.hpp"

namespace bch3 {

namespace {

std::uint64_t pow3u(int m) {
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) p *= 3;
    return p;
}

} // namespace

EisensteinInt EisensteinInt::omega_pow(unsigned t) {
    switch (t % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1}; // w^2 = -1 - w
    }
}

std::string EisensteinInt::to_string() const {
    if (b == 0) return std::to_string(a);
    std::string s = a == 0 ? "" : std::to_string(a);
    if (b > 0 && !s.empty()) s += "+";
    if (b == -1)
        s += "-";
    else if (b != 1)
        s += std::to_string(b) + "*";
    s += "w";
    return s;
}

EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return {x.a + y.a, x.b + y.b}; }
EisensteinInt operator-(EisensteinInt x, EisensteinInt y) { return {x.a - y.a, x.b - y.b}; }

EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

EisensteinInt operator*(long long s, EisensteinInt x) { return {s * x.a, s * x.b}; }

void TraceCounts::tally(std::uint8_t t) {
    if (t == 0)
        ++n0;
    else if (t == 1)
        ++n1;
    else
        ++n2;
}

EisensteinInt TraceCounts::char_sum() const {
    return {static_cast<long long>(n0) - static_cast<long long>(n2),
            static_cast<long long>(n1) - static_cast<long long>(n2)};
}

std::vector<Elem> field_domain(const FieldContext& f) {
    std::vector<Elem> d(f.q());
    for (Elem x = 0; x < f.q(); ++x) d[x] = x;
    return d;
}

std::vector<Elem> unit_domain(const FieldContext& f) {
    std::vector<Elem> d;
    d.reserve(f.n());
    for (Elem x = 1; x < f.q(); ++x) d.push_back(x);
    return d;
}

QuadraticGaussSum gauss_quadratic(int s) {
    if (s < 1) throw parameter_error("gauss_quadratic: s must be positive");
    QuadraticGaussSum g;
    g.s = s;
    if (s % 2 == 0) {
        // (-1)^{s-1} i^s 3^{s/2} with s even: -(-1)^{s/2} 3^{s/2}
        long long mag = 1;
        for (int i = 0; i < s / 2; ++i) mag *= 3;
        g.real = true;
        g.value = ((s / 2) % 2 == 0) ? -mag : mag;
    } else {
        // i^s 3^{s/2}: sign alternates with (s-1)/2
        g.real = false;
        g.sign = ((s - 1) / 2 % 2 == 0) ? 1 : -1;
        g.magnitude = 1;
        for (int i = 0; i < (s - 1) / 2; ++i) g.magnitude *= 3;
    }
    return g;
}

EisensteinInt QuadraticGaussSum::as_eisenstein() const {
    if (real) return {value, 0};
    // i*sqrt(3) = 1 + 2w
    return (sign * magnitude) * EisensteinInt{1, 2};
}

std::string QuadraticGaussSum::to_string() const {
    if (real) return std::to_string(value);
    std::string s = sign < 0 ? "-" : "";
    return s + "i*3^(" + std::to_string(this->s) + "/2)";
}

EisensteinInt gauss_quadratic_direct(const FieldContext& f) {
    TraceCounts plus, minus;
    for (std::uint32_t k = 0; k < f.n(); ++k) {
        if (k % 2 == 0)
            plus.tally(f.trace_of_alpha_pow(k));
        else
            minus.tally(f.trace_of_alpha_pow(k));
    }
    return plus.char_sum() - minus.char_sum();
}

bool power_sum_identity_check(const FieldContext& f, Elem a, Elem b, std::uint64_t e) {
    if (a == 0) throw parameter_error("power_sum_identity_check: a must be nonzero");
    if (std::gcd(e, static_cast<std::uint64_t>(f.n())) != 2)
        throw parameter_error("power_sum_identity_check: only gcd(e, 3^m - 1) = 2 is supported");

    TraceCounts counts;
    counts.tally(f.trace(b)); // x = 0
    const std::uint32_t la = f.log(a);
    std::uint64_t idx = la;
    const std::uint64_t step = e % f.n();
    for (std::uint32_t k = 0; k < f.n(); ++k) {
        counts.tally(f.trace(f.add(f.alpha_pow(idx), b)));
        idx += step;
        if (idx >= f.n()) idx -= f.n();
    }
    const EisensteinInt lhs = counts.char_sum();

    const long long eta = f.is_square(a) ? 1 : -1;
    const EisensteinInt rhs =
        EisensteinInt::omega_pow(f.trace(b)) * (eta * gauss_quadratic(f.m()).as_eisenstein());
    return lhs == rhs;
}

namespace {

long long kloosterman_tabulated(const FieldContext& f, Elem a, Elem b) {
    const std::uint32_t n = f.n();
    const auto& T = f.trace_pow_table();
    TraceCounts counts;
    if (a == 0 && b == 0) return static_cast<long long>(n);
    if (a == 0 || b == 0) {
        const std::uint32_t l = f.log(a == 0 ? b : a);
        for (std::uint32_t j = 0; j < n; ++j) counts.tally(T[(l + j) % n]);
    } else {
        const std::uint32_t la = f.log(a), lb = f.log(b);
        std::uint32_t ia = la, ib = lb;
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint8_t t = static_cast<std::uint8_t>(T[ia] + T[ib]);
            if (t >= 3) t -= 3;
            counts.tally(t);
            ia = ia + 1 == n ? 0 : ia + 1;
            ib = ib == 0 ? n - 1 : ib - 1;
        }
    }
    const EisensteinInt s = counts.char_sum();
    if (!s.is_real()) throw std::logic_error("kloosterman: sum has a nonzero w-component");
    return s.a;
}

} // namespace

long long kloosterman(const FieldContext& f, Elem a, Elem b) {
    return kloosterman_tabulated(f, a, b);
}

long long kloosterman_reference(const FieldContext& f, Elem a, Elem b) {
    TraceCounts counts;
    for (Elem x = 1; x < f.q(); ++x)
        counts.tally(f.trace(f.add(f.mul(a, x), f.mul(b, f.inv(x)))));
    const EisensteinInt s = counts.char_sum();
    if (!s.is_real()) throw std::logic_error("kloosterman_reference: sum has a nonzero w-component");
    return s.a;
}

std::uint64_t kloosterman_weight_bridge(const FieldContext& f, Elem a, Elem b) {
    if (f.m() % 2 == 0) throw parameter_error("kloosterman_weight_bridge: m must be odd");
    if (a == 0 && b == 0) throw parameter_error("kloosterman_weight_bridge: (0, 0) excluded");
    const long long num = 2ll * f.n() - 2 * kloosterman(f, a, b);
    if (num % 3 != 0 || num < 0) throw std::logic_error("kloosterman bridge: weight is not an integer");
    return static_cast<std::uint64_t>(num / 3);
}

KloostermanScan kloosterman_bound_scan(const FieldContext& f, int workers, bool force) {
    if (f.m() % 2 == 0) throw parameter_error("kloosterman_bound_scan: m must be odd");
    if (f.m() > 5 && !force)
        throw capacity_error("kloosterman_bound_scan: m > 5 scans 3^{2m} pairs (use force)");

    const std::uint32_t q = f.q();
    KloostermanScan scan;
    scan.m = f.m();
    scan.pairs = static_cast<std::uint64_t>(q) * q - 1;
    scan.bound = static_cast<long long>((pow3u(f.m()) + 2 * pow3u(f.m() - 1) - 1) / 4);

    long long best = -static_cast<long long>(f.n()) - 1;
    Elem best_a = 0, best_b = 0;

#ifdef _OPENMP
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
#endif
    {
        long long lmax = -static_cast<long long>(f.n()) - 1;
        Elem la = 0, lb = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long a = 0; a < static_cast<long long>(q); ++a) {
            for (Elem b = (a == 0 ? 1u : 0u); b < q; ++b) {
                long long k = kloosterman_tabulated(f, static_cast<Elem>(a), b);
                if (k > lmax || (k == lmax && (static_cast<Elem>(a) < la || (static_cast<Elem>(a) == la && b < lb)))) {
                    lmax = k;
                    la = static_cast<Elem>(a);
                    lb = b;
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (lmax > best || (lmax == best && (la < best_a || (la == best_a && lb < best_b)))) {
                best = lmax;
                best_a = la;
                best_b = lb;
            }
        }
    }

    scan.max_value = best;
    scan.argmax_a = best_a;
    scan.argmax_b = best_b;
    scan.holds = best <= scan.bound;
    scan.gap = scan.bound - best;
    return scan;
}

} // namespace bch3
