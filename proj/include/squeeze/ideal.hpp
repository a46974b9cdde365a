#ifndef SQUEEZE_IDEAL_HPP
#define SQUEEZE_IDEAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "squeeze/monomial.hpp"

namespace squeeze {

// Graded Betti numbers: (homological index i, internal degree j) -> count.
// Tables for an ideal I are stored ideal-indexed; the quotient view shifts
// the homological index by one and adds the entry (0,0) = 1.
class BettiTable {
public:
    void add(int i, int j, long long count);
    long long get(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    // max i with a nonzero entry, or -1 for the empty table.
    int proj_dim() const;

    BettiTable quotient_view() const;

    bool operator==(const BettiTable& rhs) const { return entries_ == rhs.entries_; }

    // True if every entry of *this is <= the matching entry of rhs.
    bool dominated_by(const BettiTable& rhs) const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, long long> entries_;
};

// Finitely generated monomial ideal, stored by its minimal generators.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Monomial> gens) { assign(std::move(gens)); }

    static MonomialIdeal zero() { return MonomialIdeal{}; }

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    bool contains(const Monomial& u) const;

    // max over generators of m(u); 0 for the zero and unit ideals.
    int max_index() const;
    int max_generator_degree() const;

    bool operator==(const MonomialIdeal& rhs) const { return gens_ == rhs.gens_; }
    bool operator!=(const MonomialIdeal& rhs) const { return gens_ != rhs.gens_; }

private:
    void assign(std::vector<Monomial> gens);
    std::vector<Monomial> gens_;  // minimal, degrevlex-ascending
};

MonomialIdeal minimalize(std::vector<Monomial> gens);

// Borel-exchange criteria on the minimal generators (sound and complete for
// monomial ideals; the equivalence with the dominance-closure definition is
// covered by tests, not assumed here).
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_squarefree_strongly_stable(const MonomialIdeal& ideal);

// (I : x_m^infty): strip all x_m factors from the generators, minimalize.
MonomialIdeal colon_saturate_by_last(const MonomialIdeal& ideal, int var);

// Ideal generated by all degree-d monomials of I in n variables.
MonomialIdeal degree_part_ideal(const MonomialIdeal& ideal, int n, int d);

// Number of degree-d standard monomials (monomials not in I) in n variables,
// for d = 0..max_degree.  Computed by explicit enumeration.
std::vector<long long> hilbert_function_quotient(const MonomialIdeal& ideal, int n,
                                                 int max_degree);

// beta_{i,i+j}(I) = sum over generators of degree j of C(m(u)-1, i).
// Requires is_strongly_stable.
BettiTable betti_eliahou_kervaire(const MonomialIdeal& ideal);

// beta_{i,i+j}(I) = sum over generators of degree j of C(m(u)-j, i).
// Requires is_squarefree_strongly_stable.
BettiTable betti_squarefree_stable(const MonomialIdeal& ideal);

// beta_{i,i+j}(I) = sum over generators of degree j of C(|set(u)|, i),
// for an ideal with linear quotients in the given generator order.
BettiTable betti_linear_quotients(const std::vector<Monomial>& ordered_gens,
                                  const std::vector<int>& set_sizes);

long long binomial(long long n, long long k);

// All monomials of degree d in n variables that are not in the ideal.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int n, int degree);

// Degreewise membership equality up to the given degree bound.
bool equal_up_to_degree(const MonomialIdeal& a, const MonomialIdeal& b, int n, int max_degree);

}  // namespace squeeze

#endif
