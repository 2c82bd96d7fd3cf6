#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bch3 {

// Dense polynomial over F3. Coefficients ascending by degree, canonical form:
// no trailing zeros, so the zero polynomial is the empty vector and
// degree() == -1 for it.
struct Poly3 {
    std::vector<std::uint8_t> c;

    Poly3() = default;
    explicit Poly3(std::vector<std::uint8_t> coeffs);

    static Poly3 zero() { return Poly3{}; }
    static Poly3 one();
    static Poly3 x();
    static Poly3 monomial(std::size_t deg, std::uint8_t a = 1);
    static Poly3 x_pow_n_minus_1(std::size_t n);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    std::uint8_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    std::uint8_t constant() const { return coeff(0); }

    void trim();
    std::string to_string() const;

    bool operator==(const Poly3&) const = default;
};

Poly3 operator+(const Poly3& a, const Poly3& b);
Poly3 operator-(const Poly3& a, const Poly3& b);
Poly3 operator*(const Poly3& a, const Poly3& b);

Poly3 poly_scale(const Poly3& a, std::uint8_t s);

// Quotient and remainder; b must be nonzero.
std::pair<Poly3, Poly3> poly_divmod(const Poly3& a, const Poly3& b);
Poly3 poly_mod(const Poly3& a, const Poly3& m);

// Monic gcd; gcd(0, 0) = 0.
Poly3 poly_gcd(Poly3 a, Poly3 b);
Poly3 poly_lcm(const Poly3& a, const Poly3& b);

Poly3 poly_modpow(const Poly3& base, std::uint64_t e, const Poly3& mod);

// a0^{-1} x^t f(1/x) with t = deg f; requires f(0) != 0. Monic input stays
// monic, and the map is an involution on such polynomials.
Poly3 reciprocal(const Poly3& f);
bool is_self_reciprocal(const Poly3& g);

} // namespace bch3
