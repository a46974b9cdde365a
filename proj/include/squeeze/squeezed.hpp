#ifndef SQUEEZE_SQUEEZED_HPP
#define SQUEEZE_SQUEEZED_HPP

#include <string>
#include <vector>

#include "squeeze/ideal.hpp"
#include "squeeze/monomial.hpp"
#include "squeeze/simplicial.hpp"

namespace squeeze {

// Finite monomial set U in m variables containing 1 and every variable,
// closed under divisors, and closed upward under the dominance order within
// each degree.  The seed of every squeezed ball and sphere.
class ShiftedOrderIdeal {
public:
    // Validates the three axioms; throws with a witness monomial on failure.
    static ShiftedOrderIdeal validate(int m, std::vector<Monomial> monomials);

    int variable_count() const { return m_; }
    int max_degree() const;
    const std::vector<Monomial>& monomials() const { return mons_; }
    bool contains(const Monomial& u) const;

    // |{u in U : deg(u) = k}| for k = 0..max_degree().
    std::vector<long long> degree_counts() const;

    bool operator==(const ShiftedOrderIdeal& rhs) const {
        return m_ == rhs.m_ && mons_ == rhs.mons_;
    }

private:
    int m_ = 0;
    std::vector<Monomial> mons_;  // degrevlex-ascending
};

struct SqueezedPair {
    int d = 0;
    int n = 0;  // m + d + 1
    SimplicialComplex ball;
    SimplicialComplex sphere;
};

// F_d(u): the (d+1)-subset {i_1, i_1+1} U {i_2+2, i_2+3} U ... U {n+2k-d..n};
// F_d(1) = {n-d, ..., n}.  Requires deg(u) <= floor((d+1)/2) and u in n-d-1
// variables.
std::vector<int> facet_F(const Monomial& u, int d, int n);

// The squeezed d-ball generated by { F_d(u) : u in U } and its boundary
// sphere, on n = m + d + 1 vertices.
SqueezedPair build_squeezed(const ShiftedOrderIdeal& U, int d);

// I(U): ideal generated by all monomials of K[x_1..x_{n-d-1}] outside U.
// Strongly stable; generators have degree <= max_degree(U) + 1.
MonomialIdeal ideal_I_of_U(const ShiftedOrderIdeal& U);

// Graded Betti numbers of R/I_{S_d(U)} assembled from the Eliahou-Kervaire
// table of I(U) by the three-case duality rule; returned ideal-indexed
// (entry (i,j) counts R(-j) in homological degree i+1 of the quotient
// resolution).  Requires max_degree(U) <= floor(d/2).
BettiTable squeezed_sphere_betti(const ShiftedOrderIdeal& U, int d);

// The unique shifted order ideal whose degree-k slice is the revlex segment
// of the prescribed size: greedily takes the degrevlex-smallest monomials
// whose divisors are already present, then validates.
ShiftedOrderIdeal lex_order_ideal(int m, const std::vector<long long>& degree_counts);

// All shifted order ideals in m variables with degrees <= max_deg, in a
// canonical order (by size, then by the sorted monomial lists).
// Guarded at m <= 4, max_deg <= 3.
std::vector<ShiftedOrderIdeal> enumerate_shifted_order_ideals(int m, int max_deg);

struct Chara5Report {
    bool max_index_matches = false;   // max(I) = n - d
    bool top_degree_vanishes = false; // A_{d+1} = 0
    bool linear_dim_matches = false;  // dim A_1 = n - d
    bool lefschetz_maps_iso = false;  // x_{n-d}^{d-2i} : A_i -> A_{d-i} iso
    bool all() const {
        return max_index_matches && top_degree_vanishes && linear_dim_matches &&
               lefschetz_maps_iso;
    }
};

// The four conditions characterizing which strongly stable ideals arise from
// boundary complexes of simplicial d-polytopes (d <= 5), evaluated on
// A = K[x_1..x_{n-d}]/(I n K[x_1..x_{n-d}]) by standard-monomial counting.
Chara5Report chara5_condition_check(const MonomialIdeal& ideal, int n, int d);

// The shifted complex of the squeezed ball: facets
// {i_1, i_2+1, ..., i_k+k-1} U {last d+1-k vertices of [n]} for u in U.
// Its Stanley-Reisner ideal equals alpha(I(U)) with a = (0,1,2,...).
SimplicialComplex exterior_shifted_ball(const ShiftedOrderIdeal& U, int d);

struct SqueezeCountReport {
    long long sq_count = 0;   // squeezed (d-2)-spheres on [n-1]
    long long ssq_count = 0;  // S-squeezed (d-1)-spheres on [n]
    bool equal() const { return sq_count == ssq_count; }
};

// sq(d-1, n-1) = ssq(d, n): both sides enumerate shifted order ideals in
// n-d-1 variables with degrees <= floor(d/2).
SqueezeCountReport squeeze_counts_relation_check(int d, int n);

}  // namespace squeeze

#endif
