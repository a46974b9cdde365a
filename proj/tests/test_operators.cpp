#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "squeeze/ideal.hpp"
#include "squeeze/operators.hpp"
#include "squeeze/rng.hpp"

using namespace squeeze;

namespace {

Monomial mk(const std::string& s) { return Monomial::parse(s); }

MonomialIdeal ideal_of(const std::vector<std::string>& gens) {
    std::vector<Monomial> mons;
    for (const auto& s : gens) mons.push_back(Monomial::parse(s));
    return MonomialIdeal(std::move(mons));
}

MonomialIdeal random_strongly_stable(SplitMix64& rng, int nvars, int maxdeg) {
    std::set<Monomial> closure;
    int count = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < count; ++t) {
        std::vector<int> idx;
        int deg = static_cast<int>(rng.uniform(1, maxdeg));
        for (int k = 0; k < deg; ++k) idx.push_back(static_cast<int>(rng.uniform(1, nvars)));
        closure.insert(Monomial::from_index_sequence(idx));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        auto next = closure;
        for (const auto& u : closure)
            for (auto [j, e] : u.exponents())
                for (int i = 1; i < j; ++i)
                    if (next.insert((u / Monomial::variable(j)).times_var(i)).second) grew = true;
        closure = std::move(next);
    }
    return MonomialIdeal({closure.begin(), closure.end()});
}

}  // namespace

TEST_CASE("shift sequence representation and parsing") {
    ShiftSequence a = ShiftSequence::arithmetic_tail({0, 2}, 2);
    CHECK(a.at(0) == 0);
    CHECK(a.at(1) == 2);
    CHECK(a.at(3) == 6);
    CHECK(a.at(10) == 20);

    ShiftSequence b = ShiftSequence::parse("0,1,2,2,=");
    CHECK(b.at(2) == 2);
    CHECK(b.at(9) == 2);
    CHECK(ShiftSequence::parse("0,2,4,+2").at(4) == 8);
    CHECK(ShiftSequence::parse(b.str()).at(3) == b.at(3));
    CHECK_THROWS(ShiftSequence::parse("0,2"));
    CHECK_THROWS(ShiftSequence::constant_tail({0, 2, 1}));
}

TEST_CASE("alpha on monomials") {
    ShiftSequence even = ShiftSequence::arithmetic_tail({0, 2}, 2);
    CHECK(alpha_a(mk("x1*x3^2"), even) == mk("x1*x5*x7"));
    CHECK(alpha_a(mk("x1^2*x2^2"), even) == mk("x1*x3*x6*x8"));
    CHECK(alpha_a(mk("x4"), even) == mk("x4"));
    CHECK(alpha_a(mk("1"), even) == mk("1"));
}

TEST_CASE("alpha on ideals reproduces the worked displays") {
    MonomialIdeal I = ideal_of({"x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3",
                                "x1*x2^3", "x2^4"});
    ShiftSequence a2 = ShiftSequence::constant_tail({0, 1, 2, 2});
    MonomialIdeal img = apply_operator_to_ideal(I, [&](const Monomial& u) { return alpha_a(u, a2); });
    CHECK(img == ideal_of({"x1*x2*x3^2", "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x4^2",
                           "x1*x2*x4*x5", "x1*x3*x4^2", "x2*x3*x4^2"}));

    ShiftSequence successive = ShiftSequence::arithmetic_tail({0, 1}, 1);
    MonomialIdeal stable = ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"});
    MonomialIdeal squarefree =
        apply_operator_to_ideal(stable, [&](const Monomial& u) { return alpha_a(u, successive); });
    CHECK(squarefree ==
          ideal_of({"x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5"}));
    CHECK(is_squarefree_strongly_stable(squarefree));

    CHECK(apply_operator_to_ideal(MonomialIdeal(), [&](const Monomial& u) {
              return alpha_a(u, successive);
          }).is_zero());
}

TEST_CASE("quotient sets") {
    CHECK(quotient_set(mk("x1*x3^2"), ShiftSequence::arithmetic_tail({0, 1}, 1)) ==
          std::set<int>({2, 3}));
    CHECK(quotient_set(mk("x1*x3^2"), ShiftSequence::arithmetic_tail({0, 2}, 2)) ==
          std::set<int>({3, 4}));
    CHECK(quotient_set(mk("x1^3"), ShiftSequence::constant_tail({0, 1, 2})).empty());
    CHECK_THROWS_AS(quotient_set(mk("1"), ShiftSequence::constant_tail({0})), std::domain_error);
}

TEST_CASE("quotient set size equals m(u) - 1 and tables match") {
    SplitMix64 rng(31);
    for (int t = 0; t < 30; ++t) {
        MonomialIdeal I = random_strongly_stable(rng, 4, 3);
        std::vector<long long> prefix = {0};
        for (int k = 1; k < 4; ++k) prefix.push_back(prefix.back() + rng.uniform(0, 2));
        ShiftSequence a = ShiftSequence::constant_tail(prefix);

        auto gens = I.generators();
        std::sort(gens.begin(), gens.end(),
                  [](const Monomial& u, const Monomial& v) { return lex_less(v, u); });
        std::vector<Monomial> images;
        std::vector<int> sizes;
        for (const auto& u : gens) {
            auto qs = quotient_set(u, a);
            CHECK(static_cast<int>(qs.size()) == u.max_index() - 1);
            images.push_back(alpha_a(u, a));
            sizes.push_back(static_cast<int>(qs.size()));
        }
        CHECK(betti_linear_quotients(images, sizes) == betti_eliahou_kervaire(I));
    }
}

TEST_CASE("quotient sets of the doubled shift on the worked ideal") {
    MonomialIdeal IU = ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"});
    ShiftSequence doubled = ShiftSequence::arithmetic_tail({0, 2}, 2);
    auto gens = IU.generators();
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& u, const Monomial& v) { return lex_less(v, u); });
    std::vector<Monomial> images;
    std::vector<int> sizes;
    for (const auto& u : gens) {
        images.push_back(alpha_a(u, doubled));
        sizes.push_back(static_cast<int>(quotient_set(u, doubled).size()));
    }
    std::multiset<int> size_set(sizes.begin(), sizes.end());
    CHECK(size_set == std::multiset<int>({0, 1, 1, 2, 2, 2}));
    CHECK(betti_linear_quotients(images, sizes) == betti_eliahou_kervaire(IU));
    CHECK(MonomialIdeal(images) ==
          ideal_of({"x1*x3", "x1*x4", "x2*x4", "x1*x5*x7", "x2*x5*x7", "x3*x5*x7"}));
}

TEST_CASE("monotonicity of alpha on nested strongly stable ideals") {
    SplitMix64 rng(37);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal I = random_strongly_stable(rng, 3, 3);
        // A strongly stable subideal: Borel closure of a subset of G(I) products.
        auto gens = I.generators();
        std::vector<Monomial> seed;
        for (const auto& g : gens)
            if (rng.uniform(0, 1)) seed.push_back(g.times_var(1));
        if (seed.empty()) seed.push_back(gens[0].times_var(2));
        std::set<Monomial> closure(seed.begin(), seed.end());
        bool grew = true;
        while (grew) {
            grew = false;
            auto next = closure;
            for (const auto& u : closure)
                for (auto [j, e] : u.exponents())
                    for (int i = 1; i < j; ++i)
                        if (next.insert((u / Monomial::variable(j)).times_var(i)).second)
                            grew = true;
            closure = std::move(next);
        }
        MonomialIdeal J({closure.begin(), closure.end()});
        for (const auto& g : J.generators()) REQUIRE(I.contains(g));

        std::vector<long long> prefix = {0};
        for (int k = 1; k < 4; ++k) prefix.push_back(prefix.back() + rng.uniform(0, 2));
        ShiftSequence a = ShiftSequence::constant_tail(prefix);
        auto op = [&](const Monomial& u) { return alpha_a(u, a); };
        MonomialIdeal alphaI = apply_operator_to_ideal(I, op);
        for (const auto& g : J.generators()) CHECK(alphaI.contains(alpha_a(g, a)));
    }
}

TEST_CASE("polarization") {
    PolarizedMonomial p = polarize(mk("x1^2*x2"));
    CHECK(p.factors == std::vector<std::pair<int, int>>({{1, 1}, {1, 2}, {2, 1}}));
    CHECK(polarize(mk("x3")).factors == std::vector<std::pair<int, int>>({{3, 1}}));
    CHECK(polarize(mk("1")).factors.empty());

    MonomialIdeal I = ideal_of({"x1^2", "x1*x2", "x2^2"});
    MonomialIdeal flat = polarize_ideal_flattened(I);
    // Pairs present: (1,1),(1,2),(2,1),(2,2) -> 1,2,3,4.
    CHECK(flat == ideal_of({"x1*x2", "x1*x3", "x3*x4"}));
    for (const auto& g : flat.generators()) CHECK(g.is_squarefree());
}

TEST_CASE("sigma compression") {
    ShiftSequence three = ShiftSequence::constant_tail({3});
    CHECK(sigma_a(mk("x1^4"), three) == mk("x1^2*x2^2"));
    CHECK(sigma_a(mk("x1^3*x2"), three) == mk("x1^2*x2*x3"));
    CHECK(sigma_a(mk("x1^2*x2^2"), three) == mk("x1^2*x3^2"));
    CHECK(sigma_a(mk("x1"), three) == mk("x1"));

    // Output exponents stay below a.
    SplitMix64 rng(41);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> idx;
        int deg = static_cast<int>(rng.uniform(1, 6));
        for (int k = 0; k < deg; ++k) idx.push_back(static_cast<int>(rng.uniform(1, 3)));
        Monomial u = Monomial::from_index_sequence(idx);
        Monomial img = sigma_a(u, three);
        CHECK(img.degree() == u.degree());
        for (auto [i, e] : img.exponents()) CHECK(e < 3);
    }
    CHECK_THROWS_AS(sigma_a(mk("x1^2"), ShiftSequence::constant_tail({1})), std::domain_error);
}
