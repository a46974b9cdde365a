#ifndef SQUEEZE_GIN_HPP
#define SQUEEZE_GIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "squeeze/field.hpp"
#include "squeeze/ideal.hpp"
#include "squeeze/linalg.hpp"
#include "squeeze/monomial.hpp"
#include "squeeze/poly.hpp"
#include "squeeze/rng.hpp"
#include "squeeze/simplicial.hpp"
#include "squeeze/squeezed.hpp"

namespace squeeze {

// Thrown when independently seeded generic matrices keep disagreeing.
struct gin_disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation contradicts a verified mathematical expectation
// (e.g. the U set of a complex fails the shifted-order-ideal axioms).
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GinResult {
    MonomialIdeal ideal;  // generated by the initial monomials found, degrees <= D
    int n = 0;
    int D = 0;
    Field field = Field::rationals;
    int seeds_agreeing = 0;
    std::vector<std::uint64_t> seeds;     // the agreeing derived seeds
    std::vector<long long> ideal_dims;    // dim of the degree-t component, t = 0..D
};

namespace detail {

template <class F>
std::vector<std::vector<F>> random_matrix(int n, SplitMix64& rng) {
    std::vector<std::vector<F>> m(n, std::vector<F>(n));
    for (auto& row : m)
        for (auto& x : row) x = F(rng.uniform(-999, 999));
    return m;
}

template <class F>
std::vector<std::vector<F>> random_invertible_matrix(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto m = random_matrix<F>(n, rng);
        if (is_invertible(m)) return m;
    }
    throw std::runtime_error("could not draw an invertible matrix");
}

struct DegreewiseInitial {
    std::vector<std::set<Monomial>> pivots;  // index t = 0..D
    std::vector<long long> dims;             // dim I_t
};

// Leading monomials of the degree components of phi(I), degree by degree.
// The degree-t component is spanned by x_i times a basis of the degree-(t-1)
// component plus the transformed generators of degree t.
template <class F>
DegreewiseInitial initial_monomials_degreewise(const std::vector<Poly<F>>& gens, int n, int D,
                                               const std::vector<std::vector<F>>& phi) {
    std::map<int, std::vector<Poly<F>>> transformed_by_degree;
    for (const auto& g : gens) {
        if (g.is_zero_poly()) continue;
        int e = g.degree();
        if (e == 0) throw std::invalid_argument("constant generator");
        if (e <= D) transformed_by_degree[e].push_back(apply_matrix(g, phi));
    }

    DegreewiseInitial out;
    out.pivots.assign(D + 1, {});
    out.dims.assign(D + 1, 0);

    std::vector<Monomial> prev_basis;                 // degree t-1 monomial basis
    std::vector<std::vector<F>> prev_rows;            // echelon basis of the component
    for (int t = 1; t <= D; ++t) {
        std::vector<Monomial> basis = monomials_of_degree(n, t);  // degrevlex-descending
        std::map<Monomial, int> index;
        for (std::size_t c = 0; c < basis.size(); ++c) index[basis[c]] = static_cast<int>(c);

        Echelon<F> ech(basis.size());
        for (const auto& row : prev_rows) {
            for (int i = 1; i <= n; ++i) {
                std::vector<F> lifted(basis.size(), F(0));
                for (std::size_t c = 0; c < prev_basis.size(); ++c) {
                    if (is_zero(row[c])) continue;
                    lifted[index.at(prev_basis[c].times_var(i))] = row[c];
                }
                ech.add_row(std::move(lifted));
            }
        }
        auto it = transformed_by_degree.find(t);
        if (it != transformed_by_degree.end())
            for (const auto& g : it->second) ech.add_row(coefficient_vector(g, index, basis.size()));

        for (std::size_t col : ech.pivot_columns()) out.pivots[t].insert(basis[col]);
        out.dims[t] = static_cast<long long>(ech.rank());
        prev_basis = std::move(basis);
        prev_rows = ech.rows();
    }
    return out;
}

inline bool same_pivots(const DegreewiseInitial& a, const DegreewiseInitial& b) {
    return a.pivots == b.pivots && a.dims == b.dims;
}

}  // namespace detail

// Generic initial ideal w.r.t. degrevlex, truncated at degree D: runs the
// degreewise extraction with two independently seeded generic matrices and
// returns only on agreement.
template <class F>
GinResult gin_truncated_core(const std::vector<Poly<F>>& gens, int n, int D,
                             std::uint64_t seed, Field tag) {
    if (n < 1 || D < 0) throw std::invalid_argument("gin needs n >= 1, D >= 0");
    const int max_rounds = 3;
    for (int round = 0; round < max_rounds; ++round) {
        std::uint64_t s1 = mix_seed(seed, 2 * round);
        std::uint64_t s2 = mix_seed(seed, 2 * round + 1);
        auto phi1 = detail::random_invertible_matrix<F>(n, s1);
        auto phi2 = detail::random_invertible_matrix<F>(n, s2);
        auto r1 = detail::initial_monomials_degreewise(gens, n, D, phi1);
        auto r2 = detail::initial_monomials_degreewise(gens, n, D, phi2);
        if (!detail::same_pivots(r1, r2)) continue;

        std::vector<Monomial> all;
        for (const auto& level : r1.pivots) all.insert(all.end(), level.begin(), level.end());
        GinResult result;
        result.ideal = minimalize(std::move(all));
        result.n = n;
        result.D = D;
        result.field = tag;
        result.seeds_agreeing = 2;
        result.seeds = {s1, s2};
        result.ideal_dims = r1.dims;
        // In characteristic 0 the result must be strongly stable; a failure
        // marks a non-generic draw.
        if (tag == Field::rationals && !is_strongly_stable(result.ideal)) continue;
        return result;
    }
    throw gin_disagreement("non-generic matrices suspected");
}

template <class F>
std::vector<Poly<F>> ideal_to_polys(const MonomialIdeal& ideal) {
    std::vector<Poly<F>> polys;
    polys.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) polys.push_back(Poly<F>::monomial(g));
    return polys;
}

GinResult gin_truncated(const MonomialIdeal& ideal, int n, int D, std::uint64_t seed,
                        Field field = Field::rationals);

// Exterior algebraic shifting: the shifted complex read off the generic
// initial ideal of the exterior face ideal.  Guarded at n <= 12.
SimplicialComplex exterior_gin(const SimplicialComplex& complex, std::uint64_t seed,
                               Field field = Field::rationals);

struct LSets {
    std::vector<std::vector<Monomial>> by_degree;  // L_0 .. L_D
    GinResult gin;
};

// Standard monomials of gin(I_Gamma) in the first n-d variables, graded by
// degree, up to the degree bound D.
LSets L_set(const SimplicialComplex& complex, int d, int D, std::uint64_t seed,
            Field field = Field::rationals);

// Standard monomials of gin(I_Gamma) in the first n-d-1 variables, validated
// as a shifted order ideal of degree <= floor(d/2).
ShiftedOrderIdeal U_set(const SimplicialComplex& complex, int d, std::uint64_t seed,
                        Field field = Field::rationals);

struct LefschetzReport {
    bool weak = false;
    std::optional<bool> strong;  // computed only when requested
};

// Monomial criteria on the L sets: weak needs degrees <= floor(d/2)+1 only
// (standard monomials form an order ideal, so the top inclusion propagates);
// strong compares x_{n-d}-power shifts of L_i with L_{d-i} up to degree d.
LefschetzReport lefschetz_checks(const SimplicialComplex& complex, int d, std::uint64_t seed,
                                 Field field = Field::rationals, bool with_strong = false);

// Sq(Gamma) = S_d(U(Gamma)).
SqueezedPair squeeze_complex(const SimplicialComplex& complex, int d, std::uint64_t seed,
                             Field field = Field::rationals);

// Generic hyperplane sections: substitute away the last m variables along
// generic linear forms drawn from the given stream.
template <class F>
std::vector<Poly<F>> generic_section(const std::vector<Poly<F>>& gens, int n, int m,
                                     SplitMix64& rng) {
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    std::vector<Poly<F>> current = gens;
    for (int k = 0; k < m; ++k) {
        int nv = n - k;  // x_nv gets eliminated at this step
        std::vector<F> coeffs(nv);
        do {
            for (auto& c : coeffs) c = F(rng.uniform(-999, 999));
        } while (is_zero(coeffs[nv - 1]));
        Poly<F> replacement;
        const F scale = F(0) - F(1) / coeffs[nv - 1];
        for (int j = 1; j < nv; ++j)
            replacement.add_term(Monomial::variable(j), coeffs[j - 1] * scale);
        for (auto& g : current) g = substitute_variable(g, nv, replacement);
    }
    return current;
}

}  // namespace squeeze

#endif
