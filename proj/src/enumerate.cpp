#include "bch3/enumerate.hpp"

#include <stdexcept>
#include <vector>

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

int effective_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

WeightDistribution histogram_to_distribution(const std::vector<std::uint64_t>& hist,
                                             std::uint64_t expected_total) {
    WeightDistribution wd;
    std::uint64_t total = 0;
    for (std::uint32_t w = 0; w < hist.size(); ++w) {
        if (hist[w] == 0) continue;
        wd.counts[w] = hist[w];
        total += hist[w];
    }
    if (total != expected_total || hist[0] != 1)
        throw std::logic_error("weight enumeration lost codewords");
    return wd;
}

// Adds the generator row at byte offset `pos` to the codeword and returns
// the Hamming weight delta.
inline long long add_row(std::uint8_t* cw, const std::uint8_t* g, std::size_t glen, std::size_t pos) {
    long long delta = 0;
    std::uint8_t* dst = cw + pos;
    for (std::size_t i = 0; i < glen; ++i) {
        std::uint8_t v = static_cast<std::uint8_t>(dst[i] + g[i]);
        if (v >= 3) v = static_cast<std::uint8_t>(v - 3);
        delta += (v != 0) - (dst[i] != 0);
        dst[i] = v;
    }
    return delta;
}

} // namespace

WeightDistribution weight_distribution_exhaustive(const CyclicCode& code, std::uint32_t max_dim,
                                                  int workers) {
    const std::uint32_t k = code.dimension;
    if (k > max_dim)
        throw capacity_error("exhaustive enumeration: dimension " + std::to_string(k) +
                             " exceeds the budget " + std::to_string(max_dim) +
                             "; raise the budget or use the trace enumerator");
    if (k == 0) {
        WeightDistribution wd;
        wd.counts[0] = 1;
        return wd;
    }

    const std::uint32_t n = code.n;
    const std::vector<std::uint8_t>& g = code.generator.c;
    const std::size_t glen = g.size();
    const int nthreads = effective_workers(workers);

    int block_digits = 0;
    while (block_digits < static_cast<int>(k) && pow3u(block_digits) < 8ull * nthreads)
        ++block_digits;
    const std::uint64_t blocks = pow3u(block_digits);
    const int low_digits = static_cast<int>(k) - block_digits;
    const std::uint64_t block_size = pow3u(low_digits);

    std::vector<std::uint64_t> hist(n + 1, 0);

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
        std::vector<std::uint64_t> local(n + 1, 0);
        std::vector<std::uint8_t> cw(n, 0);
        std::vector<std::uint8_t> digits(low_digits > 0 ? low_digits : 1, 0);

#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
            std::fill(cw.begin(), cw.end(), 0);
            std::fill(digits.begin(), digits.end(), 0);
            long long weight = 0;

            std::uint64_t top = static_cast<std::uint64_t>(b);
            for (int j = 0; j < block_digits; ++j) {
                const int d = static_cast<int>(top % 3);
                top /= 3;
                for (int rep = 0; rep < d; ++rep)
                    weight += add_row(cw.data(), g.data(), glen, static_cast<std::size_t>(low_digits + j));
            }
            local[weight]++;

            for (std::uint64_t step = 1; step < block_size; ++step) {
                int p = 0;
                while (digits[p] == 2) {
                    digits[p] = 0;
                    weight += add_row(cw.data(), g.data(), glen, p);
                    ++p;
                }
                digits[p]++;
                weight += add_row(cw.data(), g.data(), glen, p);
                local[weight]++;
            }
        }

#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
        }
    }

    return histogram_to_distribution(hist, pow3u(k));
}

WeightDistribution weight_distribution_exhaustive_reference(const CyclicCode& code,
                                                            std::uint32_t max_dim) {
    const std::uint32_t k = code.dimension;
    if (k > max_dim)
        throw capacity_error("exhaustive reference: dimension " + std::to_string(k) +
                             " exceeds the budget " + std::to_string(max_dim));
    const std::uint32_t n = code.n;
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<std::uint8_t> msg(k, 0);
    std::vector<std::uint8_t> cw(n, 0);

    const std::uint64_t total = pow3u(static_cast<int>(k));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t j = 0; j < k; ++j) {
            msg[j] = static_cast<std::uint8_t>(v % 3);
            v /= 3;
        }
        std::fill(cw.begin(), cw.end(), 0);
        for (std::uint32_t j = 0; j < k; ++j) {
            if (msg[j] == 0) continue;
            for (std::size_t i = 0; i < code.generator.c.size(); ++i)
                cw[j + i] = static_cast<std::uint8_t>((cw[j + i] + msg[j] * code.generator.c[i]) % 3);
        }
        std::uint32_t w = 0;
        for (std::uint8_t s : cw) w += s != 0;
        hist[w]++;
    }
    return histogram_to_distribution(hist, total);
}

namespace {

// Single-parameter trace codes c(a) = (Tr(a alpha^{t i}))_i.
WeightDistribution trace_single(const FieldContext& f, std::uint32_t t) {
    const std::uint32_t n = f.n();
    const auto& T = f.trace_pow_table();
    std::vector<std::uint64_t> hist(n + 1, 0);
    hist[0]++; // a = 0
    for (std::uint32_t la = 0; la < n; ++la) {
        std::uint32_t zeros = 0;
        std::uint64_t idx = la;
        for (std::uint32_t i = 0; i < n; ++i) {
            zeros += T[idx] == 0;
            idx += t;
            if (idx >= n) idx -= n;
        }
        hist[n - zeros]++;
    }
    return histogram_to_distribution(hist, static_cast<std::uint64_t>(n) + 1);
}

// c(a, b) = (a(-1)^i + Tr(b alpha^{t i}))_i with a in F3.
WeightDistribution trace_affine(const FieldContext& f, std::uint32_t t) {
    const std::uint32_t n = f.n();
    const auto& T = f.trace_pow_table();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::uint32_t a = 0; a < 3; ++a) {
        const std::uint8_t a_even = static_cast<std::uint8_t>(a);
        const std::uint8_t a_odd = static_cast<std::uint8_t>((2 * a) % 3);
        // b = 0
        {
            std::uint32_t zeros = 0;
            for (std::uint32_t i = 0; i < n; ++i) zeros += ((i % 2 == 0 ? a_even : a_odd) == 0);
            hist[n - zeros]++;
        }
        for (std::uint32_t lb = 0; lb < n; ++lb) {
            std::uint32_t zeros = 0;
            std::uint64_t idx = lb;
            for (std::uint32_t i = 0; i < n; ++i) {
                std::uint8_t s = static_cast<std::uint8_t>((i % 2 == 0 ? a_even : a_odd) + T[idx]);
                if (s >= 3) s -= 3;
                zeros += s == 0;
                idx += t;
                if (idx >= n) idx -= n;
            }
            hist[n - zeros]++;
        }
    }
    return histogram_to_distribution(hist, 3ull * (n + 1));
}

// c(a, b) = (Tr(a x^e + b x^{-e}))_{x in F*} over all pairs (a, b), e in {1, 2}.
// Parameter index 0 is the zero element; index v >= 1 is alpha^{v-1}.
WeightDistribution trace_pair(const FieldContext& f, std::uint32_t e, int workers) {
    const std::uint32_t n = f.n();
    const auto& T = f.trace_pow_table();
    const int nthreads = effective_workers(workers);
    std::vector<std::uint64_t> hist(n + 1, 0);

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
        std::vector<std::uint64_t> local(n + 1, 0);
        std::vector<std::uint8_t> row(n);

#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long ai = 0; ai <= static_cast<long long>(n); ++ai) {
            if (ai == 0) {
                std::fill(row.begin(), row.end(), 0);
            } else {
                // row[j] = Tr(a x^e) at x = alpha^j
                std::uint64_t idx = static_cast<std::uint64_t>(ai - 1);
                for (std::uint32_t j = 0; j < n; ++j) {
                    row[j] = T[idx];
                    idx += e;
                    if (idx >= n) idx -= n;
                }
            }
            {
                std::uint32_t zeros = 0; // b = 0
                for (std::uint32_t j = 0; j < n; ++j) zeros += row[j] == 0;
                local[n - zeros]++;
            }
            for (std::uint32_t lb = 0; lb < n; ++lb) {
                std::uint32_t zeros = 0;
                std::uint64_t ib = lb;
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::uint8_t s = static_cast<std::uint8_t>(row[j] + T[ib]);
                    if (s >= 3) s -= 3;
                    zeros += s == 0;
                    ib = ib >= e ? ib - e : ib + n - e;
                }
                local[n - zeros]++;
            }
        }

#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
        }
    }

    const std::uint64_t q = static_cast<std::uint64_t>(n) + 1;
    return histogram_to_distribution(hist, q * q);
}

// c(a, b) = (a(-1)^i + Tr_{9/3}(b zeta4^i))_i with a in F3, b in GF(9).
WeightDistribution trace_family_f(const FieldContext& f) {
    const std::uint32_t n = f.n();
    const std::uint32_t d2 = n / 4;
    const Elem zeta4 = f.alpha_pow(d2);
    std::vector<Elem> f9 = f.subfield_elements(2);

    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::uint32_t a = 0; a < 3; ++a) {
        for (Elem b : f9) {
            std::uint8_t sub[4];
            Elem z = 1;
            for (int i = 0; i < 4; ++i) {
                sub[i] = f.subfield_trace_to_prime(f.mul(b, z), 2);
                z = f.mul(z, zeta4);
            }
            std::uint32_t zeros = 0;
            for (std::uint32_t i = 0; i < n; ++i) {
                std::uint8_t s = static_cast<std::uint8_t>((i % 2 == 0 ? a : (2 * a) % 3) + sub[i % 4]);
                if (s >= 3) s -= 3;
                zeros += s == 0;
            }
            hist[n - zeros]++;
        }
    }
    return histogram_to_distribution(hist, 27);
}

} // namespace

WeightDistribution weight_distribution_trace(Family fam, const FieldContext& f, int workers) {
    if (!family_admissible(fam, f.m()))
        throw parameter_error("family " + std::string(1, static_cast<char>(fam)) + " requires " +
                              family_admissibility_text(fam));
    switch (fam) {
        case Family::A: return trace_single(f, delta_formula(f.m(), 2));
        case Family::B: return trace_single(f, delta_formula(f.m(), 3));
        case Family::C: return trace_affine(f, delta_formula(f.m(), 3));
        case Family::E: return trace_pair(f, 1, workers);
        case Family::F: return trace_family_f(f);
        case Family::G: return trace_pair(f, 2, workers);
        case Family::D:
            throw parameter_error("family D has no trace form beyond scalar multiples");
    }
    throw parameter_error("unknown family");
}

namespace {

WeightDistribution trace_single_reference(const FieldContext& f, std::uint32_t t) {
    const std::uint32_t n = f.n();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (Elem a = 0; a < f.q(); ++a) {
        std::uint32_t w = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            w += f.trace(f.mul(a, f.alpha_pow(static_cast<std::uint64_t>(t) * i))) != 0;
        hist[w]++;
    }
    return histogram_to_distribution(hist, f.q());
}

WeightDistribution trace_affine_reference(const FieldContext& f, std::uint32_t t) {
    const std::uint32_t n = f.n();
    const Elem minus_one = f.neg(1);
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (Elem a = 0; a < 3; ++a) {
        for (Elem b = 0; b < f.q(); ++b) {
            std::uint32_t w = 0;
            for (std::uint32_t i = 0; i < n; ++i) {
                Elem sign = f.pow(minus_one, i);
                Elem s = f.add(f.mul(a, sign), f.trace(f.mul(b, f.alpha_pow(static_cast<std::uint64_t>(t) * i))));
                w += s != 0;
            }
            hist[w]++;
        }
    }
    return histogram_to_distribution(hist, 3ull * f.q());
}

WeightDistribution trace_pair_reference(const FieldContext& f, int e) {
    const std::uint32_t n = f.n();
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (Elem a = 0; a < f.q(); ++a) {
        for (Elem b = 0; b < f.q(); ++b) {
            std::uint32_t w = 0;
            for (std::uint32_t j = 0; j < n; ++j) {
                Elem x = f.alpha_pow(j);
                Elem xe = f.pow(x, e);
                Elem s = f.add(f.mul(a, xe), f.mul(b, f.inv(xe)));
                w += f.trace(s) != 0;
            }
            hist[w]++;
        }
    }
    return histogram_to_distribution(hist, static_cast<std::uint64_t>(f.q()) * f.q());
}

WeightDistribution trace_family_f_reference(const FieldContext& f) {
    const std::uint32_t n = f.n();
    const Elem zeta4 = f.alpha_pow(n / 4);
    const Elem minus_one = f.neg(1);
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (Elem a = 0; a < 3; ++a) {
        for (Elem b : f.subfield_elements(2)) {
            std::uint32_t w = 0;
            for (std::uint32_t i = 0; i < n; ++i) {
                Elem sign = f.pow(minus_one, i);
                std::uint8_t s = static_cast<std::uint8_t>(
                    (f.mul(a, sign) + f.subfield_trace_to_prime(f.mul(b, f.pow(zeta4, i)), 2)) % 3);
                w += s != 0;
            }
            hist[w]++;
        }
    }
    return histogram_to_distribution(hist, 27);
}

} // namespace

WeightDistribution weight_distribution_trace_reference(Family fam, const FieldContext& f) {
    if (!family_admissible(fam, f.m()))
        throw parameter_error("family " + std::string(1, static_cast<char>(fam)) + " requires " +
                              family_admissibility_text(fam));
    switch (fam) {
        case Family::A: return trace_single_reference(f, delta_formula(f.m(), 2));
        case Family::B: return trace_single_reference(f, delta_formula(f.m(), 3));
        case Family::C: return trace_affine_reference(f, delta_formula(f.m(), 3));
        case Family::E: return trace_pair_reference(f, 1);
        case Family::F: return trace_family_f_reference(f);
        case Family::G: return trace_pair_reference(f, 2);
        case Family::D:
            throw parameter_error("family D has no trace form beyond scalar multiples");
    }
    throw parameter_error("unknown family");
}

} // namespace bch3
