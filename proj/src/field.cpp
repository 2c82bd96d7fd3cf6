#include "bch3/field.hpp"

#include <stdexcept>

#include "bch3/errors.hpp"

namespace bch3 {

namespace {

std::uint64_t pow3(int m) {
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) p *= 3;
    return p;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// x has order exactly 3^m - 1 in F3[x]/(f). That forces f irreducible, since
// no proper factorization leaves a unit group that large.
bool is_primitive_modulus(const Poly3& f, int m) {
    if (f.degree() != m || !f.is_monic() || f.constant() == 0) return false;
    const std::uint64_t n = pow3(m) - 1;
    const Poly3 x = Poly3::x();
    if (poly_modpow(x, n, f) != Poly3::one()) return false;
    for (std::uint64_t p : prime_factors(n))
        if (poly_modpow(x, n / p, f) == Poly3::one()) return false;
    return true;
}

Poly3 candidate_from_encoding(std::uint64_t enc, int m) {
    std::vector<std::uint8_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) {
        coeffs[i] = static_cast<std::uint8_t>(enc % 3);
        enc /= 3;
    }
    coeffs[m] = 1;
    return Poly3(std::move(coeffs));
}

} // namespace

FieldContext FieldContext::make(int m) {
    if (m < 1 || m > kMaxDegree)
        throw capacity_error("field: m must be in [1, " + std::to_string(kMaxDegree) + "]");
    const std::uint64_t q = pow3(m);
    for (std::uint64_t enc = 1; enc < q; ++enc) {
        Poly3 f = candidate_from_encoding(enc, m);
        if (is_primitive_modulus(f, m)) return make(m, f);
    }
    throw std::logic_error("field: no primitive polynomial found"); // unreachable
}

FieldContext FieldContext::make(int m, const Poly3& modulus) {
    if (m < 1 || m > kMaxDegree)
        throw capacity_error("field: m must be in [1, " + std::to_string(kMaxDegree) + "]");
    if (!is_primitive_modulus(modulus, m))
        throw parameter_error("field: modulus is not a primitive degree-" + std::to_string(m) +
                              " polynomial over F3");
    FieldContext f;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(pow3(m));
    f.n_ = f.q_ - 1;
    f.modulus_ = modulus;
    f.build_tables();
    return f;
}

Elem FieldContext::add(Elem a, Elem b) const {
    Elem r = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
        std::uint32_t s = a % 3 + b % 3;
        if (s >= 3) s -= 3;
        r += s * place;
        a /= 3;
        b /= 3;
        place *= 3;
    }
    return r;
}

Elem FieldContext::neg(Elem a) const {
    Elem r = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
        std::uint32_t d = a % 3;
        r += (d == 0 ? 0 : 3 - d) * place;
        a /= 3;
        place *= 3;
    }
    return r;
}

Elem FieldContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldContext::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n_];
}

Elem FieldContext::inv(Elem a) const {
    if (a == 0) throw parameter_error("field: inverse of zero");
    return exp_[(n_ - log_[a]) % n_];
}

Elem FieldContext::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw parameter_error("field: negative power of zero");
        return 0;
    }
    long long r = static_cast<long long>(log_[a]) % n_ * (e % n_) % n_;
    r %= n_;
    if (r < 0) r += n_;
    return exp_[static_cast<std::uint32_t>(r)];
}

Elem FieldContext::frobenius(Elem a) const {
    if (a == 0) return 0;
    return exp_[(3ull * log_[a]) % n_];
}

std::uint32_t FieldContext::log(Elem a) const {
    if (a == 0) throw parameter_error("field: log of zero");
    return log_[a];
}

Elem FieldContext::subfield_trace(Elem a, int d) const {
    if (d < 1 || m_ % d != 0) throw parameter_error("subfield_trace: d must divide m");
    Elem acc = a, sum = a;
    const std::uint64_t frob_exp = pow3(d);
    for (int i = 1; i < m_ / d; ++i) {
        acc = acc == 0 ? 0 : exp_[(frob_exp % n_) * log_[acc] % n_];
        sum = add(sum, acc);
    }
    return sum;
}

std::uint8_t FieldContext::subfield_trace_to_prime(Elem y, int d) const {
    if (d < 1 || m_ % d != 0) throw parameter_error("subfield_trace_to_prime: d must divide m");
    if (y != 0 && exp_[pow3(d) % n_ * log_[y] % n_] != y)
        throw parameter_error("subfield_trace_to_prime: element not in GF(3^d)");
    Elem acc = y, sum = y;
    for (int i = 1; i < d; ++i) {
        acc = frobenius(acc);
        sum = add(sum, acc);
    }
    if (sum > 2) throw std::logic_error("subfield trace left the prime field");
    return static_cast<std::uint8_t>(sum);
}

std::vector<Elem> FieldContext::subfield_elements(int d) const {
    if (d < 1 || m_ % d != 0) throw parameter_error("subfield_elements: d must divide m");
    const std::uint32_t sub_n = static_cast<std::uint32_t>(pow3(d)) - 1;
    const std::uint32_t step = n_ / sub_n;
    std::vector<Elem> out;
    out.reserve(sub_n + 1);
    out.push_back(0);
    for (std::uint32_t k = 0; k < sub_n; ++k) out.push_back(exp_[static_cast<std::uint64_t>(k) * step % n_]);
    return out;
}

bool FieldContext::is_square(Elem a) const {
    if (a == 0) throw parameter_error("is_square: zero has no quadratic character");
    return log_[a] % 2 == 0;
}

void FieldContext::build_tables() {
    // x^m = -(low part of modulus); precompute that tail once and twice.
    Elem red1 = 0;
    {
        Elem place = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint8_t d = modulus_.coeff(i);
            red1 += (d == 0 ? 0 : 3 - d) * place;
            place *= 3;
        }
    }
    const Elem red2 = add(red1, red1);
    const Elem top_place = q_ / 3;

    exp_.assign(n_, 0);
    log_.assign(q_, 0);
    exp_[0] = 1;
    for (std::uint32_t k = 1; k < n_; ++k) {
        Elem v = exp_[k - 1];
        Elem top = v / top_place;
        Elem shifted = (v - top * top_place) * 3;
        exp_[k] = top == 0 ? shifted : (top == 1 ? add(shifted, red1) : add(shifted, red2));
    }
    {
        Elem v = exp_[n_ - 1];
        Elem top = v / top_place;
        Elem shifted = (v - top * top_place) * 3;
        Elem wrap = top == 0 ? shifted : (top == 1 ? add(shifted, red1) : add(shifted, red2));
        if (wrap != 1) throw std::logic_error("field: alpha order mismatch while building tables");
    }
    for (std::uint32_t k = 0; k < n_; ++k) log_[exp_[k]] = k;

    // Tr is F3-linear; tabulate the digit basis, then fill by lowest digit.
    std::uint8_t basis[kMaxDegree][3];
    for (int i = 0; i < m_; ++i) {
        Elem e = 1;
        for (int j = 0; j < i; ++j) e *= 3;
        for (int d = 1; d <= 2; ++d) {
            Elem v = static_cast<Elem>(d) * e;
            Elem acc = v, sum = v;
            for (int k = 1; k < m_; ++k) {
                acc = frobenius(acc);
                sum = add(sum, acc);
            }
            if (sum > 2) throw std::logic_error("field: trace left the prime field");
            basis[i][d] = static_cast<std::uint8_t>(sum);
        }
    }
    trace_.assign(q_, 0);
    for (Elem v = 1; v < q_; ++v) {
        Elem w = v;
        int j = 0;
        while (w % 3 == 0) {
            w /= 3;
            ++j;
        }
        Elem place = 1;
        for (int i = 0; i < j; ++i) place *= 3;
        std::uint32_t d = w % 3;
        trace_[v] = static_cast<std::uint8_t>((trace_[v - d * place] + basis[j][d]) % 3);
    }
    trace_pow_.assign(n_, 0);
    for (std::uint32_t k = 0; k < n_; ++k) trace_pow_[k] = trace_[exp_[k]];
}

namespace {
const FieldContext& same_field(FieldElem a, FieldElem b) {
    if (a.field == nullptr || a.field != b.field)
        throw parameter_error("field element context mismatch");
    return *a.field;
}
} // namespace

FieldElem operator+(FieldElem a, FieldElem b) {
    const FieldContext& f = same_field(a, b);
    return {f.add(a.value, b.value), f};
}

FieldElem operator-(FieldElem a, FieldElem b) {
    const FieldContext& f = same_field(a, b);
    return {f.sub(a.value, b.value), f};
}

FieldElem operator*(FieldElem a, FieldElem b) {
    const FieldContext& f = same_field(a, b);
    return {f.mul(a.value, b.value), f};
}

bool operator==(FieldElem a, FieldElem b) { return same_field(a, b), a.value == b.value; }

Poly3 minimal_polynomial(const FieldContext& f, Elem x) {
    if (x == 0) return Poly3::x();
    std::vector<Elem> orbit{x};
    for (Elem y = f.frobenius(x); y != x; y = f.frobenius(y)) orbit.push_back(y);

    std::vector<Elem> coeffs{1}; // product over the orbit of (X - root)
    for (Elem root : orbit) {
        std::vector<Elem> next(coeffs.size() + 1, 0);
        const Elem neg_root = f.neg(root);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], coeffs[i]);
            next[i] = f.add(next[i], f.mul(coeffs[i], neg_root));
        }
        coeffs = std::move(next);
    }
    std::vector<std::uint8_t> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 2) throw std::logic_error("minimal_polynomial: coefficient outside F3");
        out[i] = static_cast<std::uint8_t>(coeffs[i]);
    }
    return Poly3(std::move(out));
}

Elem poly_eval(const Poly3& p, Elem x, const FieldContext& f) {
    Elem acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = f.add(f.mul(acc, x), p.c[i]);
    return acc;
}

} // namespace bch3
