#ifndef SQUEEZE_OPERATORS_HPP
#define SQUEEZE_OPERATORS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "squeeze/ideal.hpp"
#include "squeeze/monomial.hpp"

namespace squeeze {

// Nondecreasing infinite integer sequence, stored as a finite prefix plus a
// tail rule: constant repetition of the last entry, or an arithmetic
// continuation with a fixed step.
// CLI syntax: "0,2,4,+2" (prefix then arithmetic step), "0,1,2,2,=" (constant).
class ShiftSequence {
public:
    enum class Tail { constant, arithmetic };

    ShiftSequence(std::vector<long long> prefix, Tail tail = Tail::constant,
                  long long step = 0);

    static ShiftSequence constant_tail(std::vector<long long> prefix) {
        return ShiftSequence(std::move(prefix), Tail::constant, 0);
    }
    static ShiftSequence arithmetic_tail(std::vector<long long> prefix, long long step) {
        return ShiftSequence(std::move(prefix), Tail::arithmetic, step);
    }

    long long at(size_t k) const;

    static ShiftSequence parse(const std::string& text);
    std::string str() const;

private:
    std::vector<long long> prefix_;
    Tail tail_;
    long long step_;
};

// alpha^a: x_{i_1} x_{i_2} ... x_{i_k} -> x_{i_1} x_{i_2+a_1} ... x_{i_k+a_{k-1}};
// requires a_0 = 0.
Monomial alpha_a(const Monomial& u, const ShiftSequence& a);

// Ideal generated by the images of the minimal generators, minimalized.
MonomialIdeal apply_operator_to_ideal(const MonomialIdeal& ideal,
                                      const std::function<Monomial(const Monomial&)>& op);

// set(alpha^a(u)): union over l = 0..d-1 of { k : i_l + a_l <= k < i_{l+1} + a_l }
// with i_0 = 1 and a_0 = 0.  Its size is m(u) - 1.  Throws on the unit.
std::set<int> quotient_set(const Monomial& u, const ShiftSequence& a);

// Squarefree monomial in doubly indexed variables x_{ij}.
struct PolarizedMonomial {
    std::vector<std::pair<int, int>> factors;  // sorted (i, j) pairs, no repeats

    bool operator==(const PolarizedMonomial& rhs) const { return factors == rhs.factors; }
};

PolarizedMonomial polarize(const Monomial& u);

// Flatten a family of polarized monomials into single-index squarefree
// monomials: the pairs actually present are ordered lexicographically and
// assigned consecutive indices 1, 2, ...
std::vector<Monomial> flatten_polarized(const std::vector<PolarizedMonomial>& mons);

// Polarize every minimal generator and flatten the result over the pairs
// present in the whole family.
MonomialIdeal polarize_ideal_flattened(const MonomialIdeal& ideal);

// sigma^a for a nondecreasing sequence of positive integers (1-based: the
// k-th entry of `a` is a_k for k >= 1).  Exponents are decomposed greedily
// left to right into blocks of q_j = a_j - 1 with a remainder s <= q on the
// block-end variable, so every output exponent b_i satisfies b_i < a_i.
Monomial sigma_a(const Monomial& u, const ShiftSequence& a);

}  // namespace squeeze

#endif
