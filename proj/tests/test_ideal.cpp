#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "squeeze/ideal.hpp"
#include "squeeze/operators.hpp"
#include "squeeze/rng.hpp"

using namespace squeeze;

namespace {

MonomialIdeal ideal_of(const std::vector<std::string>& gens) {
    std::vector<Monomial> mons;
    for (const auto& s : gens) mons.push_back(Monomial::parse(s));
    return MonomialIdeal(std::move(mons));
}

Monomial mk(const std::string& s) { return Monomial::parse(s); }

// Brute-force dominance-closure oracle: every monomial of I up to the bound,
// together with every equal-degree monomial below it in dominance, must lie
// in I.
bool strongly_stable_oracle(const MonomialIdeal& I, int nvars, int maxdeg) {
    for (int deg = 1; deg <= maxdeg; ++deg)
        for (const auto& v : monomials_of_degree(nvars, deg)) {
            if (!I.contains(v)) continue;
            for (const auto& u : monomials_of_degree(nvars, deg))
                if (dominates(u, v) && !I.contains(u)) return false;
        }
    return true;
}

bool squarefree_stable_oracle(const MonomialIdeal& I, int nvars, int maxdeg) {
    for (const auto& g : I.generators())
        if (!g.is_squarefree()) return false;
    for (int deg = 1; deg <= maxdeg; ++deg)
        for (const auto& v : monomials_of_degree(nvars, deg)) {
            if (!v.is_squarefree() || !I.contains(v)) continue;
            for (const auto& u : monomials_of_degree(nvars, deg))
                if (u.is_squarefree() && dominates(u, v) && !I.contains(u)) return false;
        }
    return true;
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

TEST_CASE("minimalize") {
    CHECK(ideal_of({"x1", "x1*x2"}) == ideal_of({"x1"}));
    MonomialIdeal paper = ideal_of({"x1*x3", "x1*x4", "x2*x4", "x1*x5*x7", "x2*x5*x7", "x3*x5*x7"});
    CHECK(paper.generators().size() == 6);
    CHECK(MonomialIdeal().is_zero());
}

TEST_CASE("contains") {
    MonomialIdeal I = ideal_of({"x1^2", "x1*x2", "x2^2"});
    CHECK(I.contains(mk("x1^2*x3")));
    CHECK_FALSE(I.contains(mk("x1*x3^2")));
    CHECK_FALSE(MonomialIdeal().contains(mk("x1")));
    CHECK(ideal_of({"1"}).contains(mk("1")));
}

TEST_CASE("strong stability predicate") {
    CHECK(is_strongly_stable(ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"})));
    CHECK_FALSE(is_strongly_stable(ideal_of({"x1*x3"})));
    CHECK(is_strongly_stable(ideal_of({"x1"})));
    CHECK(is_strongly_stable(MonomialIdeal()));
}

TEST_CASE("squarefree strong stability predicate") {
    CHECK(is_squarefree_strongly_stable(
        ideal_of({"x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5"})));
    CHECK_FALSE(is_squarefree_strongly_stable(ideal_of({"x1*x3"})));
    CHECK_FALSE(is_squarefree_strongly_stable(ideal_of({"x1^2"})));
}

TEST_CASE("stability predicates agree with the dominance-closure oracle") {
    SplitMix64 rng(11);
    int stable_seen = 0;
    for (int t = 0; t < 40; ++t) {
        MonomialIdeal I = random_strongly_stable(rng, 4, 3);
        CHECK(is_strongly_stable(I) == strongly_stable_oracle(I, 4, 4));
        if (is_strongly_stable(I)) ++stable_seen;
    }
    CHECK(stable_seen == 40);  // Borel closures are strongly stable

    // Perturbed ideals: drop one generator and recheck both routes agree.
    SplitMix64 rng2(13);
    for (int t = 0; t < 40; ++t) {
        MonomialIdeal I = random_strongly_stable(rng2, 4, 3);
        auto gens = I.generators();
        if (gens.size() < 2) continue;
        gens.erase(gens.begin() + static_cast<long>(rng2.uniform(0, static_cast<long>(gens.size()) - 1)));
        MonomialIdeal J(gens);
        CHECK(is_strongly_stable(J) == strongly_stable_oracle(J, 4, 4));
    }
}

TEST_CASE("squarefree predicate agrees with its oracle on shifted complexes") {
    MonomialIdeal I = ideal_of({"x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5"});
    CHECK(is_squarefree_strongly_stable(I) == squarefree_stable_oracle(I, 5, 5));
    MonomialIdeal bad = ideal_of({"x2*x3"});
    CHECK(is_squarefree_strongly_stable(bad) == squarefree_stable_oracle(bad, 3, 3));
}

TEST_CASE("colon saturation by a variable") {
    CHECK(colon_saturate_by_last(ideal_of({"x1*x3^2", "x3^3"}), 3) == ideal_of({"1"}));
    CHECK(colon_saturate_by_last(ideal_of({"x1^2", "x2*x3"}), 3) == ideal_of({"x1^2", "x2"}));
    CHECK(colon_saturate_by_last(ideal_of({"x1^2"}), 3) == ideal_of({"x1^2"}));
}

TEST_CASE("degree part ideal") {
    CHECK(degree_part_ideal(ideal_of({"x1"}), 2, 2) == ideal_of({"x1^2", "x1*x2"}));
    CHECK(degree_part_ideal(ideal_of({"x1^2", "x1*x2", "x2^2"}), 2, 2) ==
          ideal_of({"x1^2", "x1*x2", "x2^2"}));
    CHECK(degree_part_ideal(ideal_of({"x1^3"}), 2, 2).is_zero());
}

TEST_CASE("Hilbert function by enumeration") {
    CHECK(hilbert_function_quotient(ideal_of({"x1^2", "x1*x2", "x2^2"}), 3, 3) ==
          std::vector<long long>({1, 3, 3, 3}));
    CHECK(hilbert_function_quotient(MonomialIdeal(), 2, 2) ==
          std::vector<long long>({1, 2, 3}));
    CHECK(hilbert_function_quotient(ideal_of({"x1"}), 1, 2) ==
          std::vector<long long>({1, 0, 0}));
}

TEST_CASE("Eliahou-Kervaire table") {
    MonomialIdeal I = ideal_of({"x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3",
                                "x1*x2^3", "x2^4"});
    BettiTable t = betti_eliahou_kervaire(I);
    CHECK(t.get(0, 4) == 7);
    CHECK(t.get(1, 5) == 8);
    CHECK(t.get(2, 6) == 2);
    CHECK(t.entries().size() == 3);
    CHECK(t.proj_dim() == I.max_index() - 1);

    BettiTable s = betti_eliahou_kervaire(
        ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"}));
    CHECK(s.get(0, 2) == 3);
    CHECK(s.get(1, 3) == 2);
    CHECK(s.get(0, 3) == 3);
    CHECK(s.get(1, 4) == 6);
    CHECK(s.get(2, 5) == 3);

    CHECK(betti_eliahou_kervaire(ideal_of({"x1"})) == [] {
        BettiTable w;
        w.add(0, 1, 1);
        return w;
    }());
    CHECK_THROWS_AS(betti_eliahou_kervaire(ideal_of({"x1*x3"})), std::domain_error);
}

TEST_CASE("squarefree stable table") {
    BettiTable t = betti_squarefree_stable(
        ideal_of({"x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5"}));
    CHECK(t.get(0, 2) == 3);
    CHECK(t.get(1, 3) == 2);
    CHECK(t.get(0, 3) == 3);
    CHECK(t.get(1, 4) == 6);
    CHECK(t.get(2, 5) == 3);
    CHECK(betti_squarefree_stable(ideal_of({"x1"})).get(0, 1) == 1);
    CHECK(betti_squarefree_stable(ideal_of({"x1*x2"})).get(0, 2) == 1);
}

TEST_CASE("linear quotients table") {
    BettiTable t = betti_linear_quotients({mk("x1*x2"), mk("x2^2")}, {0, 1});
    CHECK(t.get(0, 2) == 2);
    CHECK(t.get(1, 3) == 1);
    CHECK(betti_linear_quotients({mk("x1^3")}, {0}).get(0, 3) == 1);
    CHECK_THROWS_AS(betti_linear_quotients({mk("x1")}, {0, 1}), std::invalid_argument);
}

TEST_CASE("Hilbert function from the Betti table (alternating sums)") {
    SplitMix64 rng(17);
    for (int t = 0; t < 25; ++t) {
        MonomialIdeal I = random_strongly_stable(rng, 3, 3);
        if (I.is_unit()) continue;
        int n = 3;
        BettiTable quotient = betti_eliahou_kervaire(I).quotient_view();
        // a_k = sum_i (-1)^i beta_{ik}(R/I); H(R/I, t) = sum_j a_j C(n-1+t-j, t-j).
        std::map<int, long long> a;
        for (const auto& [key, val] : quotient.entries()) {
            auto [i, k] = key;
            a[k] += (i % 2 == 0 ? val : -val);
        }
        auto direct = hilbert_function_quotient(I, n, 8);
        for (int deg = 0; deg <= 8; ++deg) {
            long long predicted = 0;
            for (const auto& [j, aj] : a)
                predicted += aj * binomial(n - 1 + deg - j, deg - j);
            CHECK(predicted == direct[deg]);
        }
    }
}

TEST_CASE("proj dim equals max(I) - 1 for strongly stable ideals") {
    SplitMix64 rng(23);
    for (int t = 0; t < 25; ++t) {
        MonomialIdeal I = random_strongly_stable(rng, 4, 3);
        CHECK(betti_eliahou_kervaire(I).proj_dim() == I.max_index() - 1);
    }
}

TEST_CASE("unit and zero ideals") {
    CHECK(ideal_of({"1"}).is_unit());
    CHECK(ideal_of({"1", "x1"}).is_unit());
    CHECK(ideal_of({"1"}).max_index() == 0);
    CHECK(MonomialIdeal().max_index() == 0);
}
