#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "squeeze/operators.hpp"
#include "squeeze/simplicial.hpp"
#include "squeeze/squeezed.hpp"

using namespace squeeze;

namespace {

Monomial mk(const std::string& s) { return Monomial::parse(s); }

std::vector<Monomial> monomials_of(const std::vector<std::string>& strs) {
    std::vector<Monomial> mons;
    for (const auto& s : strs) mons.push_back(Monomial::parse(s));
    return mons;
}

MonomialIdeal ideal_of(const std::vector<std::string>& gens) {
    return MonomialIdeal(monomials_of(gens));
}

ShiftedOrderIdeal example_U5() {
    return ShiftedOrderIdeal::validate(
        3, monomials_of({"1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2"}));
}

// Brute-force oracle: filter all subsets of the degree <= 2 monomials in two
// variables that contain the base {1, x1, x2} and satisfy the axioms
// literally.
int count_shifted_order_ideals_2_2_brute() {
    auto deg2 = monomials_of({"x1^2", "x1*x2", "x2^2"});
    int count = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::set<Monomial> U = {mk("1"), mk("x1"), mk("x2")};
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) U.insert(deg2[b]);
        bool ok = true;
        for (const auto& u : U) {
            for (auto [i, e] : u.exponents())
                if (!U.count(u / Monomial::variable(i))) ok = false;
            for (const auto& v : monomials_of_degree(2, u.degree()))
                if (dominates(u, v) && !U.count(v)) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("shifted order ideal validation") {
    CHECK_NOTHROW(example_U5());
    CHECK_NOTHROW(ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"})));
    // x1^2 dominates x1*x2 which is missing.
    CHECK_THROWS_AS(ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2", "x1^2"})),
                    std::invalid_argument);
    // divisor missing
    CHECK_THROWS_AS(ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2", "x2^3"})),
                    std::invalid_argument);
    // variable missing
    CHECK_THROWS_AS(ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1"})),
                    std::invalid_argument);
    CHECK(example_U5().degree_counts() == std::vector<long long>({1, 3, 3}));
}

TEST_CASE("facet map") {
    CHECK(facet_F(mk("x1*x3"), 5, 9) == std::vector<int>({1, 2, 5, 6, 8, 9}));
    CHECK(facet_F(mk("1"), 5, 9) == std::vector<int>({4, 5, 6, 7, 8, 9}));
    CHECK(facet_F(mk("x3^2"), 5, 9) == std::vector<int>({3, 4, 5, 6, 8, 9}));
    CHECK_THROWS(facet_F(mk("x1^4"), 5, 9));
    CHECK_THROWS(facet_F(mk("x4"), 5, 9));
}

TEST_CASE("squeezed ball and sphere of the worked example") {
    SqueezedPair pair = build_squeezed(example_U5(), 5);
    CHECK(pair.n == 9);
    std::vector<std::vector<int>> want = {
        {4, 5, 6, 7, 8, 9}, {1, 2, 6, 7, 8, 9}, {2, 3, 6, 7, 8, 9}, {3, 4, 6, 7, 8, 9},
        {1, 2, 5, 6, 8, 9}, {2, 3, 5, 6, 8, 9}, {3, 4, 5, 6, 8, 9}};
    std::sort(want.begin(), want.end());
    CHECK(pair.ball.facets() == want);
    CHECK(pair.ball.is_pure());
    CHECK(pair.sphere.dimension() == 4);
}

TEST_CASE("minimal order ideal gives a stacked ball") {
    ShiftedOrderIdeal U = ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"}));
    SqueezedPair pair = build_squeezed(U, 3);
    CHECK(pair.ball.facets().size() == 3);
    CHECK(pair.n == 6);
}

TEST_CASE("I(U)") {
    CHECK(ideal_I_of_U(example_U5()) ==
          ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"}));
    CHECK(ideal_I_of_U(ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"}))) ==
          ideal_of({"x1^2", "x1*x2", "x2^2"}));
    CHECK(ideal_I_of_U(ShiftedOrderIdeal::validate(1, monomials_of({"1", "x1"}))) ==
          ideal_of({"x1^2"}));
    for (const auto& U : enumerate_shifted_order_ideals(3, 2)) {
        MonomialIdeal I = ideal_I_of_U(U);
        CHECK(is_strongly_stable(I));
        CHECK(I.max_generator_degree() <= U.max_degree() + 1);
    }
}

TEST_CASE("Betti table of the worked sphere") {
    BettiTable t = squeezed_sphere_betti(example_U5(), 5);
    // hom 1: (-2)^3 (-3)^3 (-4)^3; hom 2: (-3)^2 (-4)^6 (-5)^6 (-6)^2;
    // hom 3: (-5)^3 (-6)^3 (-7)^3; hom 4: (-9), ideal-indexed as i-1.
    CHECK(t.get(0, 2) == 3);
    CHECK(t.get(0, 3) == 3);
    CHECK(t.get(0, 4) == 3);
    CHECK(t.get(1, 3) == 2);
    CHECK(t.get(1, 4) == 6);
    CHECK(t.get(1, 5) == 6);
    CHECK(t.get(1, 6) == 2);
    CHECK(t.get(2, 5) == 3);
    CHECK(t.get(2, 6) == 3);
    CHECK(t.get(2, 7) == 3);
    CHECK(t.get(3, 9) == 1);
    long long total = 0;
    for (const auto& [key, val] : t.entries()) total += val;
    CHECK(total == 3 + 3 + 3 + 2 + 6 + 6 + 2 + 3 + 3 + 3 + 1);

    BettiTable oct = squeezed_sphere_betti(
        ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"})), 3);
    CHECK(oct.get(0, 2) == 3);
    CHECK(oct.get(0, 3) == 2);
    CHECK(oct.get(1, 3) == 2);
    CHECK(oct.get(1, 4) == 3);
    CHECK(oct.get(2, 6) == 1);

    CHECK_THROWS(squeezed_sphere_betti(example_U5(), 3));  // not S-squeezed for d = 3
}

TEST_CASE("quotient view shifts the homological index") {
    BettiTable t = squeezed_sphere_betti(example_U5(), 5);
    BettiTable q = t.quotient_view();
    CHECK(q.get(0, 0) == 1);
    CHECK(q.get(1, 2) == t.get(0, 2));
    CHECK(q.get(4, 9) == 1);
}

TEST_CASE("revlex segment order ideal") {
    ShiftedOrderIdeal got = lex_order_ideal(3, {1, 3, 3});
    CHECK(got == ShiftedOrderIdeal::validate(
                     3, monomials_of({"1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2"})));
    CHECK(lex_order_ideal(2, {1, 2}) ==
          ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"})));
    CHECK_THROWS_AS(lex_order_ideal(2, {1, 2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(lex_order_ideal(2, {1, 1}), std::invalid_argument);

    // Counts are preserved for every enumerated seed.
    for (const auto& U : enumerate_shifted_order_ideals(3, 2)) {
        ShiftedOrderIdeal seg = lex_order_ideal(3, U.degree_counts());
        CHECK(seg.degree_counts() == U.degree_counts());
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_shifted_order_ideals(1, 1).size() == 1);
    CHECK(enumerate_shifted_order_ideals(2, 1).size() == 1);
    CHECK(static_cast<int>(enumerate_shifted_order_ideals(2, 2).size()) ==
          count_shifted_order_ideals_2_2_brute());
    CHECK(enumerate_shifted_order_ideals(0, 2).size() == 1);
    CHECK(enumerate_shifted_order_ideals(3, 2).size() == 8);
    CHECK_THROWS_AS(enumerate_shifted_order_ideals(5, 2), std::out_of_range);

    // Canonical order and axioms for every output.
    auto all = enumerate_shifted_order_ideals(3, 2);
    for (size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].monomials().size() <= all[i].monomials().size());
}

TEST_CASE("polytopality conditions") {
    Chara5Report good =
        chara5_condition_check(ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4"}),
                               6, 3);
    CHECK(good.all());

    Chara5Report bad = chara5_condition_check(ideal_of({"x1^2", "x1*x2", "x2^2"}), 6, 3);
    CHECK_FALSE(bad.top_degree_vanishes);
    CHECK_FALSE(bad.all());

    CHECK_NOTHROW(chara5_condition_check(ideal_of({"x1"}), 2, 1));
    CHECK_THROWS_AS(chara5_condition_check(ideal_of({"x1*x3"}), 6, 3), std::domain_error);
}

TEST_CASE("exterior shifted ball facets") {
    SimplicialComplex shifted = exterior_shifted_ball(example_U5(), 5);
    CHECK(stanley_reisner_ideal(shifted) ==
          ideal_of({"x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5"}));
    CHECK(shifted.is_face(std::vector<int>{1, 4, 6, 7, 8, 9}));   // u = x1*x3
    CHECK(shifted.is_face(std::vector<int>{4, 5, 6, 7, 8, 9}));   // u = 1
    CHECK(shifted.facets().size() == 7);
    CHECK(shifted.is_pure());
}

TEST_CASE("duality-assembled tables equal Hochster tables across the sweep (n <= 9)") {
    for (int m = 0; m <= 3; ++m) {
        for (const auto& U : enumerate_shifted_order_ideals(m, 2)) {
            for (int d : {4, 5}) {
                SqueezedPair pair = build_squeezed(U, d);
                CHECK(betti_hochster(pair.sphere) == squeezed_sphere_betti(U, d));
            }
        }
    }
}

TEST_CASE("squeeze count identity") {
    CHECK(squeeze_counts_relation_check(4, 7).equal());
    CHECK(squeeze_counts_relation_check(2, 4).equal());
    SqueezeCountReport r = squeeze_counts_relation_check(5, 8);
    CHECK(r.equal());
    CHECK(r.ssq_count == 4);  // U in two variables of degree <= 2
}
