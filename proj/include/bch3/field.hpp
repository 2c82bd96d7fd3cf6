#pragma once

#include <cstdint>
#include <vector>

#include "bch3/poly.hpp"

namespace bch3 {

// Field element of GF(3^m), packed base-3: the integer sum c_i * 3^i of the
// coordinate vector, always < 3^m.
using Elem = std::uint32_t;

/*
 * GF(3^m) under a monic primitive modulus. The default modulus is the first
 * monic degree-m polynomial, in ascending order of the packed integer
 * encoding of its non-leading coefficients, whose root generates the full
 * multiplicative group. Log/antilog and trace tables are built once at
 * construction; the context is immutable afterwards and safe to share
 * across threads.
 */
class FieldContext {
public:
    static constexpr int kMaxDegree = 16;

    static FieldContext make(int m);
    static FieldContext make(int m, const Poly3& modulus);

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t n() const { return n_; }
    const Poly3& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    Elem frobenius(Elem a) const;

    // Discrete log base alpha; a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem alpha_pow(std::uint64_t k) const { return exp_[k % n_]; }
    Elem alpha() const { return exp_[1 % n_]; }

    std::uint8_t trace(Elem a) const { return trace_[a]; }
    // Tr(alpha^j) for j in [0, n); the backbone of the trace-form kernels.
    std::uint8_t trace_of_alpha_pow(std::uint32_t j) const { return trace_pow_[j]; }
    const std::vector<std::uint8_t>& trace_pow_table() const { return trace_pow_; }

    // Tr from GF(3^m) onto the embedded subfield GF(3^d); d must divide m.
    Elem subfield_trace(Elem a, int d) const;
    // Tr from GF(3^d) to F3, for y already in the embedded subfield.
    std::uint8_t subfield_trace_to_prime(Elem y, int d) const;
    // The embedded copy of GF(3^d), zero included.
    std::vector<Elem> subfield_elements(int d) const;

    // True iff the discrete log is even. a must be nonzero.
    bool is_square(Elem a) const;

private:
    FieldContext() = default;
    void build_tables();

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t n_ = 0;
    Poly3 modulus_;
    std::vector<std::uint32_t> log_;       // index: element, valid for nonzero
    std::vector<Elem> exp_;                // index: exponent in [0, n)
    std::vector<std::uint8_t> trace_;      // index: element
    std::vector<std::uint8_t> trace_pow_;  // index: exponent in [0, n)
};

// Element bound to its context; arithmetic between elements of different
// contexts is rejected.
struct FieldElem {
    Elem value = 0;
    const FieldContext* field = nullptr;

    FieldElem() = default;
    FieldElem(Elem v, const FieldContext& f) : value(v), field(&f) {}
};

FieldElem operator+(FieldElem a, FieldElem b);
FieldElem operator-(FieldElem a, FieldElem b);
FieldElem operator*(FieldElem a, FieldElem b);
bool operator==(FieldElem a, FieldElem b);

// Monic minimal polynomial of x over F3; x = 0 yields the polynomial x.
// Expanded as the product of (X - x^{3^i}) over the Frobenius orbit, with the
// coefficients checked to land in the prime subfield.
Poly3 minimal_polynomial(const FieldContext& f, Elem x);

// Horner evaluation of an F3 polynomial at a field element.
Elem poly_eval(const Poly3& p, Elem x, const FieldContext& f);

} // namespace bch3
