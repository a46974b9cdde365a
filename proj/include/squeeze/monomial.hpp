#ifndef SQUEEZE_MONOMIAL_HPP
#define SQUEEZE_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace squeeze {

// Monomial in variables x1, x2, ... (1-based).  Stored as a sparse list of
// (variable index, exponent) pairs, sorted by index, exponents > 0.
// The unit monomial has an empty list.
class Monomial {
public:
    Monomial() = default;

    // From sparse (index, exponent) pairs; zero exponents dropped.
    static Monomial from_exponents(std::vector<std::pair<int, int>> exps);

    // From the index sequence i_1 <= i_2 <= ... <= i_k (with multiplicity).
    static Monomial from_index_sequence(const std::vector<int>& indices);

    static Monomial variable(int i) { return from_index_sequence({i}); }
    static Monomial unit() { return Monomial{}; }

    bool is_unit() const { return exps_.empty(); }
    int degree() const;

    // m(u): largest variable index dividing u.  Throws on the unit monomial.
    int max_index() const;

    int exponent(int var) const;
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

    // i_1 <= i_2 <= ... <= i_d, length = degree().
    std::vector<int> index_sequence() const;

    bool is_squarefree() const;

    Monomial operator*(const Monomial& rhs) const;
    Monomial times_var(int var, int power = 1) const;

    bool divides(const Monomial& other) const;
    // this / rhs; throws if rhs does not divide this.
    Monomial operator/(const Monomial& rhs) const;

    // Remove every factor of x_var (used for saturation by a variable).
    Monomial without_var(int var) const;

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
    bool operator!=(const Monomial& rhs) const { return exps_ != rhs.exps_; }

    // Text grammar: "1" for the unit, otherwise factors "x<i>" or "x<i>^<e>"
    // joined by '*', e.g. "x1^2*x3".  Whitespace tolerated on parse.
    std::string str() const;
    static Monomial parse(const std::string& text);

private:
    std::vector<std::pair<int, int>> exps_;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

// Degree reverse lexicographic order induced by x1 > x2 > ...:
// lower degree first; at equal degree the monomial with the larger exponent
// at the last differing variable (scanning from the highest index down) is
// the smaller one.
Ordering degrevlex_cmp(const Monomial& u, const Monomial& v);

// Pure lexicographic order with x1 > x2 > ...: u < v iff the leftmost
// nonzero entry of (exponents of v) - (exponents of u) is positive.
Ordering lex_cmp(const Monomial& u, const Monomial& v);

// Dominance order: u 'precedes' v iff deg(u) == deg(v) and the k-th smallest
// index of u is <= that of v for every k.  Throws on unequal degrees.
bool dominates(const Monomial& u, const Monomial& v);

inline bool degrevlex_less(const Monomial& u, const Monomial& v) {
    return degrevlex_cmp(u, v) == Ordering::less;
}
inline bool lex_less(const Monomial& u, const Monomial& v) {
    return lex_cmp(u, v) == Ordering::less;
}

// Canonical total order for containers.
inline bool operator<(const Monomial& u, const Monomial& v) {
    return degrevlex_less(u, v);
}

struct DegrevlexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const {
        return degrevlex_cmp(u, v) == Ordering::greater;
    }
};

// All monomials of the given degree in variables x1..n, degrevlex-descending.
std::vector<Monomial> monomials_of_degree(int n, int degree);

}  // namespace squeeze

#endif
