#ifndef SQUEEZE_POLY_HPP
#define SQUEEZE_POLY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "squeeze/field.hpp"
#include "squeeze/monomial.hpp"

namespace squeeze {

// Sparse polynomial with coefficients in F.  Zero coefficients are dropped.
template <class F>
class Poly {
public:
    Poly() = default;

    static Poly monomial(const Monomial& m, F coeff = F(1)) {
        Poly p;
        p.add_term(m, coeff);
        return p;
    }

    void add_term(const Monomial& m, const F& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    const std::map<Monomial, F>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }

    // Degree of a homogeneous polynomial; throws if terms disagree.
    int degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) throw std::domain_error("polynomial is not homogeneous");
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    Poly scaled(const F& c) const {
        Poly out;
        for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
        return out;
    }

private:
    std::map<Monomial, F> terms_;
};

// Substitute x_var by the given polynomial.
template <class F>
Poly<F> substitute_variable(const Poly<F>& p, int var, const Poly<F>& replacement) {
    Poly<F> out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(var);
        Poly<F> term = Poly<F>::monomial(m.without_var(var), c);
        for (int k = 0; k < e; ++k) term = term * replacement;
        out = out + term;
    }
    return out;
}

// phi = (a_ij) acting by x_j -> sum_i a_ij x_i.
template <class F>
Poly<F> apply_matrix(const Poly<F>& p, const std::vector<std::vector<F>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    std::vector<Poly<F>> images(n + 1);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            images[j].add_term(Monomial::variable(i), matrix[i - 1][j - 1]);

    Poly<F> out;
    for (const auto& [m, c] : p.terms()) {
        Poly<F> term = Poly<F>::monomial(Monomial::unit(), c);
        for (auto [j, e] : m.exponents()) {
            if (j > n) throw std::out_of_range("variable index exceeds the matrix size");
            for (int k = 0; k < e; ++k) term = term * images[j];
        }
        out = out + term;
    }
    return out;
}

// Dense coefficient vector over the given monomial basis (all terms must be
// found in the basis index).
template <class F>
std::vector<F> coefficient_vector(const Poly<F>& p, const std::map<Monomial, int>& index,
                                  std::size_t ncols) {
    std::vector<F> v(ncols, F(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("term outside the basis");
        v[it->second] = c;
    }
    return v;
}

}  // namespace squeeze

#endif
