#include "squeeze/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "squeeze/gin.hpp"
#include "squeeze/ideal.hpp"
#include "squeeze/operators.hpp"
#include "squeeze/simplicial.hpp"
#include "squeeze/squeezed.hpp"

namespace squeeze {

namespace {

MonomialIdeal ideal_of(const std::vector<std::string>& gens) {
    std::vector<Monomial> mons;
    mons.reserve(gens.size());
    for (const auto& s : gens) mons.push_back(Monomial::parse(s));
    return MonomialIdeal(std::move(mons));
}

std::vector<Monomial> monomials_of(const std::vector<std::string>& strs) {
    std::vector<Monomial> mons;
    mons.reserve(strs.size());
    for (const auto& s : strs) mons.push_back(Monomial::parse(s));
    return mons;
}

ShiftedOrderIdeal example_U5() {
    return ShiftedOrderIdeal::validate(
        3, monomials_of({"1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2"}));
}

SimplicialComplex octahedron() {
    std::vector<std::vector<int>> facets;
    for (int a : {1, 2})
        for (int b : {3, 4})
            for (int c : {5, 6}) facets.push_back({a, b, c});
    return SimplicialComplex::from_facets(6, facets);
}

BettiTable table_of(const std::vector<std::tuple<int, int, long long>>& entries) {
    BettiTable t;
    for (auto [i, j, v] : entries) t.add(i, j, v);
    return t;
}

struct Failure {
    std::string message;
};

void expect(bool cond, const std::string& message, std::ostringstream& log) {
    if (!cond) throw Failure{message};
    (void)log;
}

// Random strongly stable ideal: Borel closure of a few random monomials.
MonomialIdeal random_strongly_stable(SplitMix64& rng, int nvars, int maxdeg) {
    std::set<Monomial> closure;
    int count = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < count; ++t) {
        int deg = static_cast<int>(rng.uniform(1, maxdeg));
        std::vector<int> idx;
        for (int k = 0; k < deg; ++k) idx.push_back(static_cast<int>(rng.uniform(1, nvars)));
        closure.insert(Monomial::from_index_sequence(idx));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Monomial> next = closure;
        for (const auto& u : closure)
            for (auto [j, e] : u.exponents())
                for (int i = 1; i < j; ++i)
                    if (next.insert((u / Monomial::variable(j)).times_var(i)).second) grew = true;
        closure = std::move(next);
    }
    return MonomialIdeal({closure.begin(), closure.end()});
}

ShiftSequence random_shift_sequence(SplitMix64& rng, int length) {
    std::vector<long long> prefix = {0};
    for (int k = 1; k < length; ++k)
        prefix.push_back(prefix.back() + rng.uniform(0, 2));
    return ShiftSequence::constant_tail(std::move(prefix));
}

using CheckBody = std::function<void(std::uint64_t seed, std::ostringstream& log)>;

CheckResult run_check(const std::string& id, const std::string& name, std::uint64_t seed,
                      const CheckBody& body) {
    CheckResult result;
    result.id = id;
    result.name = name;
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    try {
        body(seed, log);
        result.passed = true;
        result.detail = log.str();
    } catch (const Failure& f) {
        result.passed = false;
        result.detail = f.message;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// --- criterion 1 -----------------------------------------------------------

void check_alpha_example(std::uint64_t, std::ostringstream& log) {
    MonomialIdeal I = ideal_of({"x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3",
                                "x1*x2^3", "x2^4"});
    ShiftSequence a1 = ShiftSequence::arithmetic_tail({0, 2}, 2);
    ShiftSequence a2 = ShiftSequence::constant_tail({0, 1, 2, 2});

    MonomialIdeal img1 =
        apply_operator_to_ideal(I, [&](const Monomial& u) { return alpha_a(u, a1); });
    MonomialIdeal img2 =
        apply_operator_to_ideal(I, [&](const Monomial& u) { return alpha_a(u, a2); });

    MonomialIdeal want1 = ideal_of({"x1*x3*x5*x7", "x1*x3*x5*x8", "x1*x3*x5*x9", "x1*x3*x6*x8",
                                    "x1*x3*x6*x9", "x1*x4*x6*x8", "x2*x4*x6*x8"});
    MonomialIdeal want2 = ideal_of({"x1*x2*x3^2", "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x4^2",
                                    "x1*x2*x4*x5", "x1*x3*x4^2", "x2*x3*x4^2"});
    expect(img1 == want1, "alpha^{a1}(I) generator set mismatch", log);
    expect(img2 == want2, "alpha^{a2}(I) generator set mismatch", log);

    BettiTable want = table_of({{0, 4, 7}, {1, 5, 8}, {2, 6, 2}});
    expect(betti_eliahou_kervaire(I) == want, "Betti numbers of I are not (7, 8, 2)", log);
    log << "alpha images and the (7,8,2) resolution match";
}

// --- criterion 2 -----------------------------------------------------------

void check_sigma_example(std::uint64_t, std::ostringstream& log) {
    MonomialIdeal I = ideal_of({"x1^4", "x1^3*x2", "x1^2*x2^2"});
    ShiftSequence a = ShiftSequence::constant_tail({3});
    MonomialIdeal img =
        apply_operator_to_ideal(I, [&](const Monomial& u) { return sigma_a(u, a); });
    MonomialIdeal want = ideal_of({"x1^2*x2^2", "x1^2*x2*x3", "x1^2*x3^2"});
    std::string got;
    for (const auto& g : img.generators()) got += g.str() + " ";
    expect(img == want, "sigma^a(I) mismatch, got " + got, log);
    log << "sigma^a image matches";
}

// --- criterion 3 -----------------------------------------------------------

void check_squeezed_example(std::uint64_t, std::ostringstream& log) {
    ShiftedOrderIdeal U = example_U5();
    SqueezedPair pair = build_squeezed(U, 5);
    expect(pair.n == 9, "n != 9", log);

    std::vector<std::vector<int>> want_facets = {
        {4, 5, 6, 7, 8, 9}, {1, 2, 6, 7, 8, 9}, {2, 3, 6, 7, 8, 9}, {3, 4, 6, 7, 8, 9},
        {1, 2, 5, 6, 8, 9}, {2, 3, 5, 6, 8, 9}, {3, 4, 5, 6, 8, 9}};
    std::sort(want_facets.begin(), want_facets.end());
    expect(pair.ball.facets() == want_facets, "B_5(U) facet list mismatch", log);

    MonomialIdeal IB = stanley_reisner_ideal(pair.ball);
    MonomialIdeal want_IB = ideal_of({"x1*x3", "x1*x4", "x2*x4", "x1*x5*x7", "x2*x5*x7",
                                      "x3*x5*x7"});
    expect(IB == want_IB, "I_{B_5(U)} mismatch", log);

    MonomialIdeal IS = stanley_reisner_ideal(pair.sphere);
    std::vector<Monomial> is_gens = want_IB.generators();
    for (const auto& extra : monomials_of({"x2*x6*x8*x9", "x3*x6*x8*x9", "x4*x6*x8*x9"}))
        is_gens.push_back(extra);
    expect(IS == MonomialIdeal(is_gens), "I_{S_5(U)} mismatch", log);

    // The displayed resolution of R/I_{S_5(U)}, ideal-indexed.
    BettiTable want = table_of({{0, 2, 3}, {0, 3, 3}, {0, 4, 3},
                                {1, 3, 2}, {1, 4, 6}, {1, 5, 6}, {1, 6, 2},
                                {2, 5, 3}, {2, 6, 3}, {2, 7, 3},
                                {3, 9, 1}});
    expect(squeezed_sphere_betti(U, 5) == want, "Betti table of R/I_{S_5(U)} mismatch", log);
    log << "facets, both ideals and the Betti table match";
}

// --- criterion 4 -----------------------------------------------------------

void check_gin_ball(std::uint64_t seed, std::ostringstream& log) {
    ShiftedOrderIdeal U = example_U5();
    SqueezedPair pair = build_squeezed(U, 5);
    MonomialIdeal IB = stanley_reisner_ideal(pair.ball);
    MonomialIdeal IU = ideal_I_of_U(U);
    expect(IU == ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"}),
           "I(U) mismatch", log);

    GinResult rational = gin_truncated(IB, 9, 4, seed, Field::rationals);
    expect(rational.ideal == IU, "gin(I_B) != I(U) over the rationals", log);
    expect(rational.seeds_agreeing == 2, "seed agreement not reached", log);

    GinResult prime = gin_truncated(IB, 9, 4, seed, Field::prime);
    expect(prime.ideal == IU, "gin(I_B) != I(U) over the prime field", log);

    expect(hilbert_function_quotient(IB, 9, 6) == hilbert_function_quotient(IU, 9, 6),
           "quotient Hilbert functions differ up to degree 6", log);
    log << "gin(I_B) = I(U) in both fields; Hilbert functions agree to degree 6";
}

// --- criteria 5 and 7: the enumeration sweep -------------------------------

std::vector<ShiftedOrderIdeal> sweep_order_ideals() {
    std::vector<ShiftedOrderIdeal> all;
    for (int m = 0; m <= 3; ++m) {
        auto part = enumerate_shifted_order_ideals(m, 2);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

void check_seed_recovery_sweep(std::uint64_t seed, std::ostringstream& log) {
    int cases = 0;
    for (const auto& U : sweep_order_ideals()) {
        for (int d : {4, 5}) {
            SqueezedPair pair = build_squeezed(U, d);
            ShiftedOrderIdeal recovered = U_set(pair.sphere, d, seed);
            expect(recovered == U,
                   "U(S_d(U)) != U for m=" + std::to_string(U.variable_count()) +
                       ", d=" + std::to_string(d),
                   log);
            LefschetzReport lef = lefschetz_checks(pair.sphere, d, seed);
            expect(lef.weak, "weak Lefschetz criterion failed for m=" +
                                 std::to_string(U.variable_count()) + ", d=" + std::to_string(d),
                   log);
            ++cases;
        }
    }
    log << cases << " sphere cases recovered their seed U with weak Lefschetz";
}

void check_face_vector_sweep(std::uint64_t, std::ostringstream& log) {
    int cases = 0;
    for (const auto& U : sweep_order_ideals()) {
        auto counts = U.degree_counts();
        for (int d : {4, 5}) {
            SqueezedPair pair = build_squeezed(U, d);
            FHGVectors ball = fhg_vectors(pair.ball);
            FHGVectors sphere = fhg_vectors(pair.sphere);

            for (size_t i = 0; i < ball.h.size(); ++i) {
                long long want = i < counts.size() ? counts[i] : 0;
                expect(ball.h[i] == want, "h_i(B_d(U)) != degree count", log);
            }
            for (size_t i = 0; i < sphere.g.size(); ++i) {
                long long want = i < counts.size() ? counts[i] : 0;
                expect(sphere.g[i] == want, "g_i(S_d(U)) != degree count", log);
            }
            int k = U.max_degree();
            for (int i = 1; i <= d - k; ++i)
                expect(ball.f[i - 1] == sphere.f[i - 1],
                       "f-vectors of ball and sphere differ below the bound", log);
            for (int i = 0; i <= d; ++i)
                expect(sphere.h[i] == sphere.h[d - i], "Dehn-Sommerville symmetry fails", log);
            ++cases;
        }
    }
    log << cases << " cases satisfy the h/g/f identities and Dehn-Sommerville";
}

// --- criterion 6 -----------------------------------------------------------

void check_octahedron(std::uint64_t seed, std::ostringstream& log) {
    SimplicialComplex gamma = octahedron();
    ShiftedOrderIdeal UG = U_set(gamma, 3, seed);
    expect(UG == ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"})),
           "U(octahedron) != {1, x1, x2}", log);

    BettiTable hoch = betti_hochster(gamma);
    expect(hoch == table_of({{0, 2, 3}, {1, 4, 3}, {2, 6, 1}}),
           "Hochster table of the octahedron ideal mismatch", log);

    BettiTable sq = squeezed_sphere_betti(UG, 3);
    BettiTable want_sq = table_of({{0, 2, 3}, {0, 3, 2}, {1, 3, 2}, {1, 4, 3}, {2, 6, 1}});
    expect(sq == want_sq, "Betti table of Sq(octahedron) mismatch", log);

    expect(hoch.dominated_by(sq), "squeezing fails to dominate entrywise", log);
    bool strict = false;
    for (const auto& [key, val] : sq.entries())
        if (hoch.get(key.first, key.second) < val) strict = true;
    expect(strict, "no strictly larger entry after squeezing", log);
    log << "U, both tables and the strict entrywise increase match";
}

// --- criterion 8 -----------------------------------------------------------

void check_stable_operator_properties(std::uint64_t seed, std::ostringstream& log) {
    SplitMix64 rng(mix_seed(seed, 0xA11CE));
    int ideals = 0;
    while (ideals < 50) {
        MonomialIdeal I = random_strongly_stable(rng, 3, 3);
        if (I.is_unit() || I.is_zero()) continue;
        ++ideals;
        expect(is_strongly_stable(I), "random closure not strongly stable", log);
        BettiTable ek = betti_eliahou_kervaire(I);

        for (int t = 0; t < 3; ++t) {
            ShiftSequence a = random_shift_sequence(rng, 4);

            std::vector<Monomial> gens = I.generators();
            std::sort(gens.begin(), gens.end(),
                      [](const Monomial& u, const Monomial& v) { return lex_less(v, u); });
            std::vector<Monomial> images;
            std::vector<int> sizes;
            for (const auto& u : gens) {
                auto qs = quotient_set(u, a);
                expect(static_cast<int>(qs.size()) == u.max_index() - 1,
                       "|set(alpha^a(u))| != m(u) - 1", log);
                images.push_back(alpha_a(u, a));
                sizes.push_back(static_cast<int>(qs.size()));
            }
            expect(betti_linear_quotients(images, sizes) == ek,
                   "linear-quotients table differs from the Eliahou-Kervaire table", log);

            MonomialIdeal shifted =
                apply_operator_to_ideal(I, [&](const Monomial& u) { return alpha_a(u, a); });
            int n = std::max(shifted.max_index(), I.max_index());
            int D = I.max_generator_degree();
            GinResult gin = gin_truncated(shifted, n, D, mix_seed(seed, ideals * 31 + t));
            expect(equal_up_to_degree(gin.ideal, I, n, D),
                   "gin(alpha^a(I)) != I up to the generator degree bound", log);
        }
    }
    log << "50 ideals x 3 shift sequences: set sizes, Betti tables and gins all match";
}

// --- criterion 9 -----------------------------------------------------------

void check_exterior_shifting(std::uint64_t seed, std::ostringstream& log) {
    ShiftedOrderIdeal U = example_U5();
    SqueezedPair pair = build_squeezed(U, 5);
    ShiftSequence successive = ShiftSequence::arithmetic_tail({0, 1}, 1);

    SimplicialComplex shifted = exterior_gin(pair.ball, seed);
    MonomialIdeal alpha_IU = apply_operator_to_ideal(
        ideal_I_of_U(U), [&](const Monomial& u) { return alpha_a(u, successive); });
    expect(stanley_reisner_ideal(shifted) == alpha_IU,
           "SR ideal of the exterior shift of B_5(U) != alpha(I(U))", log);

    SimplicialComplex predicted = exterior_shifted_ball(U, 5);
    expect(predicted == shifted, "facet formula disagrees with the exterior-gin oracle", log);

    // The shift fixes shifted complexes.
    for (const auto& fixedpoint :
         {shifted, exterior_shifted_ball(
                       ShiftedOrderIdeal::validate(2, monomials_of({"1", "x1", "x2"})), 3)}) {
        expect(is_shifted(fixedpoint), "expected a shifted complex", log);
        expect(exterior_gin(fixedpoint, seed) == fixedpoint,
               "exterior shift moved a shifted complex", log);
    }

    // Cone identity on small fixtures.
    std::vector<SimplicialComplex> fixtures = {
        SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}),
        SimplicialComplex::from_facets(3, {{1, 2, 3}}),
        SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}}),
        SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}}),
        SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
        SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}),
        SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}}),
        SimplicialComplex::from_facets(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}),
        octahedron()};
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const auto& gamma = fixtures[i];
        SimplicialComplex lhs = exterior_gin(cone(gamma, gamma.vertex_count() + 1), seed);
        SimplicialComplex rhs = cone(exterior_gin(gamma, seed), gamma.vertex_count() + 1);
        expect(lhs == rhs, "cone identity fails on fixture " + std::to_string(i), log);
    }
    log << "exterior shift of B_5(U), fixed points and 10 cone fixtures all match";
}

// --- criterion 10 ----------------------------------------------------------

void check_chara5(std::uint64_t seed, std::ostringstream& log) {
    SimplicialComplex gamma = octahedron();
    GinResult gin = gin_truncated(stanley_reisner_ideal(gamma), 6, 4, seed);
    expect(gin.ideal == ideal_of({"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4"}),
           "gin of the octahedron ideal mismatch", log);

    Chara5Report good = chara5_condition_check(gin.ideal, 6, 3);
    expect(good.all(), "derived gin fails a polytopality condition", log);

    Chara5Report bad = chara5_condition_check(ideal_of({"x1^2", "x1*x2", "x2^2"}), 6, 3);
    expect(!bad.top_degree_vanishes, "A_4 = 0 unexpectedly holds for the embedded ideal", log);
    expect(!bad.all(), "embedded ideal passes all conditions", log);
    log << "derived gin passes; the embedded ideal fails A_{d+1} = 0";
}

struct Criterion {
    std::string id;
    std::string name;
    std::vector<std::string> suites;
    CheckBody body;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"1", "stable-operator-example", {"paper-examples"}, check_alpha_example},
        {"2", "sigma-compression-example", {"paper-examples"}, check_sigma_example},
        {"3", "squeezed-ball-example", {"paper-examples"}, check_squeezed_example},
        {"4", "gin-of-squeezed-ball", {"gin"}, check_gin_ball},
        {"5", "seed-recovery-sweep", {"sweep"}, check_seed_recovery_sweep},
        {"6", "octahedron-squeezing", {"paper-examples"}, check_octahedron},
        {"7", "face-vector-sweep", {"sweep"}, check_face_vector_sweep},
        {"8", "stable-operator-properties", {"operators"}, check_stable_operator_properties},
        {"9", "exterior-shifting", {"exterior"}, check_exterior_shifting},
        {"10", "polytopality-conditions", {"paper-examples"}, check_chara5},
    };
    return list;
}

}  // namespace

std::vector<std::string> verify_suites() {
    return {"all", "paper-examples", "gin", "sweep", "operators", "exterior"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed) {
    bool all = suite == "all";
    std::vector<CheckResult> results;
    for (const auto& c : criteria()) {
        bool selected = all;
        for (const auto& s : c.suites) selected = selected || s == suite;
        if (selected) results.push_back(run_check(c.id, c.name, seed, c.body));
    }
    if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return results;
}

}  // namespace squeeze
