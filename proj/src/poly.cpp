#include "bch3/poly.hpp"

#include <algorithm>

#include "bch3/errors.hpp"

namespace bch3 {

namespace {

inline std::uint8_t f3_add(std::uint8_t a, std::uint8_t b) {
    std::uint8_t s = static_cast<std::uint8_t>(a + b);
    return s >= 3 ? static_cast<std::uint8_t>(s - 3) : s;
}

inline std::uint8_t f3_sub(std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a + 3 - b) % 3);
}

inline std::uint8_t f3_mul(std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a * b) % 3);
}

// 1 and 2 are self-inverse in F3.
inline std::uint8_t f3_inv(std::uint8_t a) { return a; }

} // namespace

Poly3::Poly3(std::vector<std::uint8_t> coeffs) : c(std::move(coeffs)) {
    for (auto v : c)
        if (v > 2) throw parameter_error("Poly3: coefficient out of F3 range");
    trim();
}

Poly3 Poly3::one() { return Poly3({1}); }
Poly3 Poly3::x() { return Poly3({0, 1}); }

Poly3 Poly3::monomial(std::size_t deg, std::uint8_t a) {
    if (a == 0) return zero();
    Poly3 p;
    p.c.assign(deg + 1, 0);
    p.c[deg] = static_cast<std::uint8_t>(a % 3);
    p.trim();
    return p;
}

Poly3 Poly3::x_pow_n_minus_1(std::size_t n) {
    Poly3 p;
    p.c.assign(n + 1, 0);
    p.c[0] = 2; // -1
    p.c[n] = 1;
    return p;
}

void Poly3::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string Poly3::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(int(c[i]));
        } else {
            if (c[i] != 1) s += std::to_string(int(c[i])) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
    Poly3 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f3_add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
    Poly3 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f3_sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    if (a.is_zero() || b.is_zero()) return Poly3::zero();
    Poly3 r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = f3_add(r.c[i + j], f3_mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly3 poly_scale(const Poly3& a, std::uint8_t s) {
    s = static_cast<std::uint8_t>(s % 3);
    if (s == 0) return Poly3::zero();
    Poly3 r = a;
    for (auto& v : r.c) v = f3_mul(v, s);
    return r;
}

std::pair<Poly3, Poly3> poly_divmod(const Poly3& a, const Poly3& b) {
    if (b.is_zero()) throw parameter_error("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly3::zero(), a};

    Poly3 rem = a;
    Poly3 quot;
    quot.c.assign(a.degree() - b.degree() + 1, 0);
    const std::uint8_t lead_inv = f3_inv(b.c.back());

    for (int d = a.degree(); d >= b.degree(); --d) {
        std::uint8_t r = rem.coeff(d);
        if (r == 0) continue;
        std::uint8_t f = f3_mul(r, lead_inv);
        quot.c[d - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) {
            std::size_t k = static_cast<std::size_t>(d - b.degree() + j);
            rem.c[k] = f3_sub(rem.c[k], f3_mul(f, b.c[j]));
        }
    }
    quot.trim();
    rem.trim();
    return {quot, rem};
}

Poly3 poly_mod(const Poly3& a, const Poly3& m) { return poly_divmod(a, m).second; }

Poly3 poly_gcd(Poly3 a, Poly3 b) {
    while (!b.is_zero()) {
        Poly3 r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) a = poly_scale(a, f3_inv(a.c.back()));
    return a;
}

Poly3 poly_lcm(const Poly3& a, const Poly3& b) {
    if (a.is_zero() || b.is_zero()) return Poly3::zero();
    Poly3 g = poly_gcd(a, b);
    Poly3 l = poly_divmod(a * b, g).first;
    if (l.c.back() != 1) l = poly_scale(l, f3_inv(l.c.back()));
    return l;
}

Poly3 poly_modpow(const Poly3& base, std::uint64_t e, const Poly3& mod) {
    Poly3 result = poly_mod(Poly3::one(), mod);
    Poly3 acc = poly_mod(base, mod);
    while (e > 0) {
        if (e & 1) result = poly_mod(result * acc, mod);
        acc = poly_mod(acc * acc, mod);
        e >>= 1;
    }
    return result;
}

Poly3 reciprocal(const Poly3& f) {
    if (f.is_zero() || f.constant() == 0)
        throw parameter_error("reciprocal: requires nonzero constant term");
    Poly3 r;
    r.c.assign(f.c.rbegin(), f.c.rend());
    r = poly_scale(r, f3_inv(f.constant()));
    r.trim();
    return r;
}

bool is_self_reciprocal(const Poly3& g) { return reciprocal(g) == g; }

} // namespace bch3
