#include "doctest.h"

#include "bch3/errors.hpp"
#include "bch3/poly.hpp"

using namespace bch3;

TEST_CASE("basic ring operations") {
    Poly3 xp1({1, 1}); // x + 1
    Poly3 xp2({2, 1}); // x + 2

    CHECK(xp1 * xp2 == Poly3({2, 0, 1})); // x^2 + 2, the cross terms cancel mod 3
    CHECK(xp1 + xp2 == Poly3({0, 2}));
    CHECK(xp1 - xp1 == Poly3::zero());
    CHECK(Poly3::zero() * xp1 == Poly3::zero());
    CHECK(Poly3({1, 2, 0, 0}).degree() == 1); // trimmed on construction
    CHECK_THROWS_AS(Poly3({3}), parameter_error);
}

TEST_CASE("divmod and gcd") {
    Poly3 a = Poly3({2, 0, 1}); // x^2 - 1
    Poly3 b = Poly3({1, 1});    // x + 1
    CHECK(poly_gcd(a, b) == b);

    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(poly_divmod(a, Poly3::zero()), parameter_error);

    // division invariant on a small deterministic sweep
    for (unsigned ai = 1; ai < 200; ++ai) {
        for (unsigned bi = 1; bi < 30; ++bi) {
            std::vector<std::uint8_t> ac, bc;
            for (unsigned v = ai; v > 0; v /= 3) ac.push_back(v % 3);
            for (unsigned v = bi; v > 0; v /= 3) bc.push_back(v % 3);
            Poly3 pa(ac), pb(bc);
            if (pb.is_zero()) continue;
            auto [qq, rr] = poly_divmod(pa, pb);
            CHECK(qq * pb + rr == pa);
            CHECK(rr.degree() < pb.degree());
        }
    }
}

TEST_CASE("lcm and modpow") {
    Poly3 f({1, 1});    // x + 1
    Poly3 g({2, 1});    // x + 2
    Poly3 fg = f * g;
    CHECK(poly_lcm(f, g) == fg);
    CHECK(poly_lcm(f, fg) == fg);

    // x^8 = 1 mod the primitive quadratic x^2 + x + 2
    Poly3 mod({2, 1, 1});
    CHECK(poly_modpow(Poly3::x(), 8, mod) == Poly3::one());
    CHECK(poly_modpow(Poly3::x(), 4, mod) == Poly3({2})); // x^4 = -1
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(Poly3({1, 1})) == Poly3({1, 1}));
    CHECK(is_self_reciprocal(Poly3({1, 1})));

    Poly3 f({1, 2, 0, 1}); // x^3 + 2x + 1
    CHECK(reciprocal(reciprocal(f)) == f);
    CHECK_FALSE(is_self_reciprocal(f));

    CHECK_THROWS_AS(reciprocal(Poly3({0, 1})), parameter_error); // f(0) = 0
    CHECK_THROWS_AS(reciprocal(Poly3::zero()), parameter_error);
}

TEST_CASE("x^n - 1 helper and string form") {
    Poly3 p = Poly3::x_pow_n_minus_1(4);
    CHECK(p.degree() == 4);
    CHECK(p.constant() == 2);
    CHECK(Poly3({2, 1, 1}).to_string() == "x^2+x+2");
    CHECK(Poly3::zero().to_string() == "0");
}
