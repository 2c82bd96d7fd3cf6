#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bch3/field.hpp"

namespace bch3 {

// Exact element a + b*w of Z[w], w a primitive cube root of unity
// (w^2 = -1 - w). Every character sum here lives in this ring.
struct EisensteinInt {
    long long a = 0;
    long long b = 0;

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(long long a_, long long b_) : a(a_), b(b_) {}

    bool is_real() const { return b == 0; }
    EisensteinInt conj() const { return {a - b, -b}; }
    std::string to_string() const;

    bool operator==(const EisensteinInt&) const = default;

    static EisensteinInt omega_pow(unsigned t);
};

EisensteinInt operator+(EisensteinInt x, EisensteinInt y);
EisensteinInt operator-(EisensteinInt x, EisensteinInt y);
EisensteinInt operator*(EisensteinInt x, EisensteinInt y);
EisensteinInt operator*(long long s, EisensteinInt x);

// Counts of trace values over a summation domain; the character sum is
// n0 + n1*w + n2*w^2.
struct TraceCounts {
    std::uint64_t n0 = 0, n1 = 0, n2 = 0;
    void tally(std::uint8_t t);
    EisensteinInt char_sum() const;
};

// Sum of w^{Tr(fn(x))} over the domain, exact.
template <typename Range, typename Fn>
EisensteinInt additive_char_sum(const FieldContext& f, const Range& domain, Fn&& fn) {
    TraceCounts c;
    for (Elem x : domain) c.tally(f.trace(fn(x)));
    return c.char_sum();
}

std::vector<Elem> field_domain(const FieldContext& f);
std::vector<Elem> unit_domain(const FieldContext& f);

/*
 * Quadratic Gauss sum over GF(3^s), closed form. Even s gives a rational
 * integer; odd s gives sign * i * 3^{s/2}, kept in a tagged imaginary form.
 * as_eisenstein() maps the odd case through i*sqrt(3) = 1 + 2w, so the value
 * stays exact in Z[w] either way.
 */
struct QuadraticGaussSum {
    int s = 0;
    bool real = true;
    long long value = 0;       // even s
    int sign = 0;              // odd s
    long long magnitude = 0;   // odd s: 3^{(s-1)/2}, the value being sign*i*sqrt(3)*magnitude

    EisensteinInt as_eisenstein() const;
    std::string to_string() const;
};
QuadraticGaussSum gauss_quadratic(int s);

// Direct summation of eta(x) chi(x) over the nonzero elements.
EisensteinInt gauss_quadratic_direct(const FieldContext& f);

// Checks sum_x chi(a x^e + b) = chi(b) eta(a) G(eta, chi) by direct
// summation; requires gcd(e, 3^m - 1) = 2 and a != 0.
bool power_sum_identity_check(const FieldContext& f, Elem a, Elem b, std::uint64_t e);

// K_m(a, b) = sum over nonzero x of chi(a x + b x^{-1}); always a rational
// integer (the terms pair up under x -> -x).
long long kloosterman(const FieldContext& f, Elem a, Elem b);
long long kloosterman_reference(const FieldContext& f, Elem a, Elem b);

// (2n - 2 K_m(a, b)) / 3: the Hamming weight of the family-E codeword
// c(a, b) for odd m. The division is checked to be exact.
std::uint64_t kloosterman_weight_bridge(const FieldContext& f, Elem a, Elem b);

struct KloostermanScan {
    int m = 0;
    std::uint64_t pairs = 0;
    long long max_value = 0;
    Elem argmax_a = 0, argmax_b = 0;
    long long bound = 0; // (3^m + 2*3^{m-1} - 1) / 4
    bool holds = false;
    long long gap = 0;   // bound - max_value
};
// Scans every pair (a, b) != (0, 0); m <= 5 unless forced.
KloostermanScan kloosterman_bound_scan(const FieldContext& f, int workers = 0, bool force = false);

} // namespace bch3
