#include <algorithm>

#include "doctest.h"

#include "bch3/codes.hpp"
#include "bch3/enumerate.hpp"
#include "bch3/errors.hpp"

using namespace bch3;

namespace {

WeightDistribution make_wd(std::initializer_list<std::pair<std::uint32_t, std::uint64_t>> init) {
    WeightDistribution wd;
    for (auto& [w, c] : init) wd.counts[w] = c;
    return wd;
}

} // namespace

TEST_CASE("code construction from defining sets") {
    FieldContext f27 = FieldContext::make(3);

    CyclicCode full = code_from_defining_set({}, f27);
    CHECK(full.dimension == 26);
    CHECK(full.generator == Poly3::one());
    CHECK(is_lcd(full));

    FieldContext f243 = FieldContext::make(5);
    CyclicCode c = code_from_defining_set({121}, f243);
    CHECK(c.n == 242);
    CHECK(c.dimension == 241);
    CHECK(c.generator == Poly3({1, 1}));

    // not a union of cosets
    CHECK_THROWS_AS(code_from_defining_set({1}, f27), parameter_error);

    // negative residues canonicalize before expansion
    CyclicCode sym = code_from_defining_set({1, 3, 9, -1, -3, -9}, f27);
    CHECK(sym.dimension == 20);
    CHECK(is_self_reciprocal(sym.generator));
}

TEST_CASE("generator product over disjoint coset unions") {
    FieldContext f = FieldContext::make(3);
    auto z1 = canonicalize_residues({1, 3, 9}, f.n());
    auto z2 = canonicalize_residues({2, 6, 18}, f.n());
    auto z12 = canonicalize_residues({1, 3, 9, 2, 6, 18}, f.n());
    CHECK(generator_from_defining_set(z12, f) ==
          generator_from_defining_set(z1, f) * generator_from_defining_set(z2, f));

    // all nonzero residues give (x^n - 1)/(x - 1)
    std::vector<std::uint32_t> nonzero;
    for (std::uint32_t i = 1; i < f.n(); ++i) nonzero.push_back(i);
    CHECK(generator_from_defining_set(nonzero, f) ==
          poly_divmod(Poly3::x_pow_n_minus_1(f.n()), Poly3({2, 1})).first);
}

TEST_CASE("family constructors") {
    FieldContext f243 = FieldContext::make(5);
    CyclicCode a5 = construct_family(Family::A, f243);
    CHECK(a5.n == 242);
    CHECK(a5.dimension == 5);
    CHECK(a5.designed_distance == 169); // delta_1 + delta_2 + 1

    FieldContext f81 = FieldContext::make(4);
    CyclicCode f4 = construct_family(Family::F, f81);
    CHECK(f4.n == 80);
    CHECK(f4.dimension == 3);
    CHECK(f4.parity_check == Poly3({1, 1}) * Poly3({1, 0, 1})); // (x+1)(x^2+1)

    FieldContext f729 = FieldContext::make(6);
    CyclicCode g6 = construct_family(Family::G, f729);
    CHECK(g6.n == 728);
    CHECK(g6.dimension == 12);
    CHECK(is_self_reciprocal(g6.generator));

    FieldContext f27 = FieldContext::make(3);
    CyclicCode e3 = construct_family(Family::E, f27);
    CHECK(e3.dimension == 6);
    CHECK(e3.generator.degree() == 20);
    // parity check = product of the minimal polynomials of alpha^5 and alpha^7
    Poly3 h = minimal_polynomial(f27, f27.alpha_pow(5)) * minimal_polynomial(f27, f27.alpha_pow(7));
    CHECK(e3.parity_check == h);

    CHECK_THROWS_AS(construct_family(Family::A, f81), parameter_error);  // m even
    CHECK_THROWS_AS(construct_family(Family::B, f81), parameter_error);  // m = 0 mod 4
    CHECK_THROWS_AS(construct_family(Family::G, f243), parameter_error); // m odd
    CHECK_THROWS_AS(construct_family(Family::E, FieldContext::make(1)), parameter_error);
}

TEST_CASE("generator times parity check is x^n - 1") {
    struct Case {
        Family fam;
        int m;
    };
    for (auto [fam, m] : {Case{Family::A, 3}, Case{Family::B, 6}, Case{Family::C, 6},
                          Case{Family::D, 1}, Case{Family::E, 3}, Case{Family::F, 2},
                          Case{Family::G, 6}}) {
        FieldContext f = FieldContext::make(m);
        CyclicCode code = construct_family(fam, f);
        CHECK(code.generator * code.parity_check == Poly3::x_pow_n_minus_1(code.n));
        CHECK(code.dimension == code.n - code.generator.degree());
    }
}

TEST_CASE("exhaustive weight distributions against stated enumerators") {
    FieldContext f243 = FieldContext::make(5);
    CHECK(weight_distribution_exhaustive(construct_family(Family::D, f243)) ==
          make_wd({{0, 1}, {242, 2}}));
    CHECK(weight_distribution_exhaustive(construct_family(Family::A, f243)) ==
          make_wd({{0, 1}, {162, 242}}));

    FieldContext f81 = FieldContext::make(4);
    CHECK(weight_distribution_exhaustive(construct_family(Family::F, f81)) ==
          make_wd({{0, 1}, {40, 12}, {60, 8}, {80, 6}}));
}

TEST_CASE("odometer kernel equals the plain reference for any worker count") {
    struct Case {
        Family fam;
        int m;
    };
    for (auto [fam, m] :
         {Case{Family::A, 3}, Case{Family::F, 2}, Case{Family::E, 3}, Case{Family::D, 3}}) {
        FieldContext f = FieldContext::make(m);
        CyclicCode code = construct_family(fam, f);
        WeightDistribution ref = weight_distribution_exhaustive_reference(code);
        for (int workers : {1, 2, 3})
            CHECK(weight_distribution_exhaustive(code, kDefaultMaxDim, workers) == ref);
    }
}

TEST_CASE("closed-form distributions") {
    CHECK(closed_form_distribution(Family::A, 5) == make_wd({{0, 1}, {162, 242}}));
    CHECK(closed_form_distribution(Family::B, 6) == make_wd({{0, 1}, {468, 364}, {504, 364}}));
    CHECK(closed_form_distribution(Family::F, 2) == make_wd({{0, 1}, {4, 12}, {6, 8}, {8, 6}}));
    CHECK_THROWS_AS(closed_form_distribution(Family::E, 3), parameter_error);
    CHECK_THROWS_AS(closed_form_distribution(Family::G, 6), parameter_error);
    CHECK_THROWS_AS(closed_form_distribution(Family::A, 4), parameter_error);
}

TEST_CASE("trace-form distributions") {
    FieldContext f729 = FieldContext::make(6);
    CHECK(weight_distribution_trace(Family::B, f729) == make_wd({{0, 1}, {468, 364}, {504, 364}}));
    CHECK(weight_distribution_trace(Family::C, f729) ==
          make_wd({{0, 1}, {468, 364}, {476, 728}, {494, 728}, {504, 364}, {728, 2}}));

    FieldContext f27 = FieldContext::make(3);
    WeightDistribution e3 = weight_distribution_trace(Family::E, f27);
    CHECK(e3.total() == 729);
    CHECK(*e3.min_positive() >= 10); // designed distance 2 * delta_2
    CHECK(e3 == weight_distribution_exhaustive(construct_family(Family::E, f27)));
    CHECK(e3 == weight_distribution_trace_reference(Family::E, f27));

    CHECK_THROWS_AS(weight_distribution_trace(Family::D, f27), parameter_error);
}

TEST_CASE("trace kernel equals the field-op reference on the small families") {
    FieldContext f27 = FieldContext::make(3);
    CHECK(weight_distribution_trace(Family::A, f27) ==
          weight_distribution_trace_reference(Family::A, f27));

    FieldContext f729 = FieldContext::make(6);
    CHECK(weight_distribution_trace(Family::B, f729) ==
          weight_distribution_trace_reference(Family::B, f729));
    CHECK(weight_distribution_trace(Family::C, f729) ==
          weight_distribution_trace_reference(Family::C, f729));

    FieldContext f9 = FieldContext::make(2);
    CHECK(weight_distribution_trace(Family::F, f9) ==
          weight_distribution_trace_reference(Family::F, f9));
    FieldContext f81 = FieldContext::make(4);
    CHECK(weight_distribution_trace(Family::F, f81) ==
          weight_distribution_trace_reference(Family::F, f81));
}

TEST_CASE("three-way agreement on the one-weight family") {
    for (int m : {3, 5}) {
        FieldContext f = FieldContext::make(m);
        CyclicCode code = construct_family(Family::A, f);
        WeightDistribution exh = weight_distribution_exhaustive(code);
        CHECK(exh == weight_distribution_trace(Family::A, f));
        CHECK(exh == closed_form_distribution(Family::A, m));
        CHECK(exh.counts.size() == 2); // one weight
    }
}

TEST_CASE("minimum distance") {
    FieldContext f243 = FieldContext::make(5);
    CHECK(*minimum_distance(weight_distribution_exhaustive(construct_family(Family::A, f243))) ==
          162);
    FieldContext f81 = FieldContext::make(4);
    CHECK(*minimum_distance(weight_distribution_exhaustive(construct_family(Family::F, f81))) == 40);
    WeightDistribution only_zero = make_wd({{0, 1}});
    CHECK_FALSE(minimum_distance(only_zero).has_value());
}

TEST_CASE("lcd and duality") {
    FieldContext f27 = FieldContext::make(3);
    CyclicCode e3 = construct_family(Family::E, f27);
    CHECK(is_lcd(e3));
    CHECK(intersection_dimension(e3, dual(e3)) == 0);
    CHECK(is_negation_closed(e3.defining_set, e3.n));

    FieldContext f243 = FieldContext::make(5);
    CyclicCode a5 = construct_family(Family::A, f243);
    CHECK_FALSE(is_lcd(a5));
    CHECK(intersection_dimension(a5, dual(a5)) != 0);
    CHECK_FALSE(is_negation_closed(a5.defining_set, a5.n));

    // dual is an involution
    FieldContext f9 = FieldContext::make(2);
    CyclicCode f2 = construct_family(Family::F, f9);
    CyclicCode dd = dual(dual(f2));
    CHECK(dd.generator == f2.generator);
    CHECK(dd.defining_set == f2.defining_set);
    CHECK(dd.dimension == f2.dimension);

    CyclicCode d3 = construct_family(Family::D, f27);
    CHECK(dual(d3).dimension == 26 - 1);

    // roots of the dual generator sit exactly on the dual defining set
    CyclicCode e3d = dual(e3);
    for (std::uint32_t j = 0; j < e3.n; ++j) {
        bool is_root = poly_eval(e3d.generator, f27.alpha_pow(j), f27) == 0;
        bool in_set = std::binary_search(e3d.defining_set.begin(), e3d.defining_set.end(), j);
        CHECK(is_root == in_set);
    }

    CHECK(intersection_dimension(e3, e3) == e3.dimension);
    // complementary pair: <(x^n-1)/(x+1)> and <x+1>
    CyclicCode r1 = code_from_defining_set({4}, f9); // C_4 = {4}, generator x + 1
    CHECK(r1.generator == Poly3({1, 1}));
    std::vector<std::int64_t> rest;
    for (int i = 0; i < 8; ++i)
        if (i != 4) rest.push_back(i);
    CyclicCode r2 = code_from_defining_set(rest, f9);
    CHECK(intersection_dimension(r1, r2) == 0);

    CHECK_THROWS_AS(intersection_dimension(e3, f2), parameter_error);
}

TEST_CASE("self-reciprocity iff negation-closed defining set") {
    struct Case {
        Family fam;
        int m;
    };
    for (auto [fam, m] : {Case{Family::A, 3}, Case{Family::A, 5}, Case{Family::B, 6},
                          Case{Family::C, 6}, Case{Family::D, 2}, Case{Family::D, 4},
                          Case{Family::E, 3}, Case{Family::E, 5}, Case{Family::F, 2},
                          Case{Family::F, 4}, Case{Family::F, 6}, Case{Family::G, 6}}) {
        FieldContext f = FieldContext::make(m);
        CyclicCode code = construct_family(fam, f);
        CHECK(is_self_reciprocal(code.generator) == is_negation_closed(code.defining_set, code.n));
        CHECK(is_lcd(code) == (intersection_dimension(code, dual(code)) == 0));
    }
}

TEST_CASE("bch bound reports") {
    FieldContext f27 = FieldContext::make(3);
    CyclicCode e3 = construct_family(Family::E, f27);
    auto wd_e3 = weight_distribution_exhaustive(e3);
    BchBoundReport r = verify_bch_bound(e3, wd_e3);
    CHECK(r.bound == 10); // 2 * delta_2
    CHECK(r.pass);

    CyclicCode d3 = construct_family(Family::D, f27);
    auto wd_d3 = weight_distribution_exhaustive(d3);
    BchBoundReport rd = verify_bch_bound(d3, wd_d3);
    CHECK(rd.bound == 26);
    CHECK(rd.min_distance == 26);
    CHECK(rd.pass);

    FieldContext f243 = FieldContext::make(5);
    CyclicCode a5 = construct_family(Family::A, f243);
    BchBoundReport ra = verify_bch_bound(a5, weight_distribution_exhaustive(a5));
    CHECK(ra.min_distance == 162);
    CHECK(ra.pass);
}

TEST_CASE("enumeration budget") {
    FieldContext f27 = FieldContext::make(3);
    CyclicCode big = code_from_defining_set({26 / 2}, f27); // dimension 25
    CHECK_THROWS_AS(weight_distribution_exhaustive(big), capacity_error);
    CHECK_THROWS_AS(weight_distribution_exhaustive_reference(big), capacity_error);
}

TEST_CASE("weight distribution helpers") {
    WeightDistribution wd = make_wd({{0, 1}, {40, 12}, {60, 8}, {80, 6}});
    CHECK(wd.total() == 27);
    CHECK(wd.enumerator_string() == "1+12z^40+8z^60+6z^80");
    CHECK(family_from_char('c') == Family::C);
    CHECK_THROWS_AS(family_from_char('z'), parameter_error);
}
