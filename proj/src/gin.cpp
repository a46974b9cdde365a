#include "squeeze/gin.hpp"

#include <algorithm>
#include <bit>

namespace squeeze {

namespace {

template <class F>
GinResult gin_monomial_input(const MonomialIdeal& ideal, int n, int D, std::uint64_t seed,
                             Field tag) {
    if (ideal.max_index() > n)
        throw std::invalid_argument("ambient variable count smaller than max(I)");
    return gin_truncated_core<F>(ideal_to_polys<F>(ideal), n, D, seed, tag);
}

// phi(e_S) expanded over the squarefree degree-|S| basis; masks sorted
// ascending, which is exactly degrevlex-descending on squarefree monomials.
template <class F>
std::map<FaceMask, F> wedge_image(FaceMask s, const std::vector<std::vector<F>>& phi, int n) {
    std::map<FaceMask, F> cur;
    cur[0] = F(1);
    for (int v : mask_to_vertices(s)) {
        std::map<FaceMask, F> next;
        for (const auto& [t, c] : cur) {
            for (int i = 1; i <= n; ++i) {
                FaceMask bit = FaceMask{1} << (i - 1);
                if (t & bit) continue;
                const F& a = phi[i - 1][v - 1];
                if (is_zero(a)) continue;
                // e_T ^ e_i moves e_i left past the elements of T above i.
                int inversions = std::popcount(t >> i);
                F term = c * a;
                if (inversions % 2) term = F(0) - term;
                auto [it, inserted] = next.try_emplace(t | bit, term);
                if (!inserted) it->second = it->second + term;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<FaceMask> subsets_of_full(int n, int k) {
    std::vector<FaceMask> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    if (k > n) return out;
    FaceMask s = (FaceMask{1} << k) - 1;
    FaceMask limit = FaceMask{1} << n;
    while (s < limit) {
        out.push_back(s);
        FaceMask c = s & (~s + 1);
        FaceMask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

template <class F>
std::vector<std::set<FaceMask>> exterior_pivots(const SimplicialComplex& complex,
                                                const std::vector<std::vector<F>>& phi) {
    int n = complex.vertex_count();
    std::vector<std::set<FaceMask>> pivots(n + 1);
    for (int k = 1; k <= n; ++k) {
        std::vector<FaceMask> basis = subsets_of_full(n, k);
        std::map<FaceMask, int> index;
        for (std::size_t c = 0; c < basis.size(); ++c) index[basis[c]] = static_cast<int>(c);

        Echelon<F> ech(basis.size());
        for (FaceMask s : basis) {
            if (complex.is_face(s)) continue;
            auto img = wedge_image(s, phi, n);
            std::vector<F> row(basis.size(), F(0));
            for (const auto& [t, c] : img) row[index.at(t)] = c;
            ech.add_row(std::move(row));
        }
        for (std::size_t col : ech.pivot_columns()) pivots[k].insert(basis[col]);
    }
    return pivots;
}

SimplicialComplex complex_from_pivots(int n, const std::vector<std::set<FaceMask>>& pivots) {
    std::set<FaceMask> faces;
    faces.insert(0);
    for (int k = 1; k <= n; ++k)
        for (FaceMask s : subsets_of_full(n, k))
            if (!pivots[k].count(s)) faces.insert(s);

    // The complement of an initial ideal must be closed under subsets.
    for (FaceMask f : faces)
        for (int b = 0; b < n; ++b) {
            FaceMask bit = FaceMask{1} << b;
            if ((f & bit) && !faces.count(f & ~bit))
                throw std::logic_error("shifted face set not closed under subsets");
        }

    std::vector<FaceMask> facets;
    for (FaceMask f : faces) {
        bool maximal = true;
        for (int b = 0; b < n && maximal; ++b) {
            FaceMask bigger = f | (FaceMask{1} << b);
            if (bigger != f && faces.count(bigger)) maximal = false;
        }
        if (maximal) facets.push_back(f);
    }
    return SimplicialComplex::from_facet_masks(n, std::move(facets), /*relaxed=*/true);
}

template <class F>
SimplicialComplex exterior_gin_run(const SimplicialComplex& complex, std::uint64_t seed,
                                   Field tag) {
    int n = complex.vertex_count();
    const int max_rounds = 3;
    for (int round = 0; round < max_rounds; ++round) {
        auto phi1 = detail::random_invertible_matrix<F>(n, mix_seed(seed, 2 * round));
        auto phi2 = detail::random_invertible_matrix<F>(n, mix_seed(seed, 2 * round + 1));
        auto p1 = exterior_pivots(complex, phi1);
        auto p2 = exterior_pivots(complex, phi2);
        if (p1 != p2) continue;
        SimplicialComplex shifted = complex_from_pivots(n, p1);
        if (tag == Field::rationals && !is_shifted(shifted)) continue;
        return shifted;
    }
    throw gin_disagreement("non-generic matrices suspected");
}

}  // namespace

GinResult gin_truncated(const MonomialIdeal& ideal, int n, int D, std::uint64_t seed,
                        Field field) {
    if (field == Field::rationals)
        return gin_monomial_input<mpq_class>(ideal, n, D, seed, field);
    return gin_monomial_input<Fp>(ideal, n, D, seed, field);
}

SimplicialComplex exterior_gin(const SimplicialComplex& complex, std::uint64_t seed,
                               Field field) {
    if (complex.vertex_count() > 12)
        throw std::out_of_range("exterior_gin guarded at n <= 12");
    if (field == Field::rationals)
        return exterior_gin_run<mpq_class>(complex, seed, field);
    return exterior_gin_run<Fp>(complex, seed, field);
}

LSets L_set(const SimplicialComplex& complex, int d, int D, std::uint64_t seed, Field field) {
    int n = complex.vertex_count();
    if (d < 1 || d > n - 1) throw std::invalid_argument("need 1 <= d <= n-1");
    LSets out;
    out.gin = gin_truncated(stanley_reisner_ideal(complex), n, D, seed, field);
    for (int i = 0; i <= D; ++i)
        out.by_degree.push_back(standard_monomials(out.gin.ideal, n - d, i));
    return out;
}

ShiftedOrderIdeal U_set(const SimplicialComplex& complex, int d, std::uint64_t seed,
                        Field field) {
    int n = complex.vertex_count();
    int m = n - d - 1;
    if (m < 0) throw std::invalid_argument("need n >= d + 1");
    int top = d / 2 + 1;
    GinResult gin = gin_truncated(stanley_reisner_ideal(complex), n, top, seed, field);

    if (!standard_monomials(gin.ideal, m, top).empty())
        throw verification_error(
            "Gamma lacks weak Lefschetz or is not Gorenstein*: monomials of degree floor(d/2)+1 "
            "survive outside gin");
    std::vector<Monomial> mons;
    for (int i = 0; i <= d / 2; ++i) {
        auto level = standard_monomials(gin.ideal, m, i);
        mons.insert(mons.end(), level.begin(), level.end());
    }
    try {
        return ShiftedOrderIdeal::validate(m, std::move(mons));
    } catch (const std::invalid_argument& e) {
        throw verification_error(std::string("Gamma lacks weak Lefschetz or is not Gorenstein*: ") +
                                 e.what());
    }
}

LefschetzReport lefschetz_checks(const SimplicialComplex& complex, int d, std::uint64_t seed,
                                 Field field, bool with_strong) {
    int n = complex.vertex_count();
    int half = d / 2;
    LSets L = L_set(complex, d, half + 1, seed, field);
    auto member = [&](int level, const Monomial& u) {
        const auto& v = L.by_degree[level];
        return std::find(v.begin(), v.end(), u) != v.end();
    };

    LefschetzReport report;
    report.weak = true;
    for (int i = 1; i <= half && report.weak; ++i)
        for (const auto& u : L.by_degree[i - 1])
            if (!member(i, u.times_var(n - d))) {
                report.weak = false;
                break;
            }
    // Above the middle degree the inclusion reverses; the standard monomials
    // form an order ideal, so checking the first level suffices.
    for (const auto& u : L.by_degree[half + 1]) {
        if (u.exponent(n - d) == 0 || !member(half, u / Monomial::variable(n - d))) {
            report.weak = false;
            break;
        }
    }

    if (with_strong) {
        LSets Lfull = L_set(complex, d, d, seed, field);
        bool strong = true;
        for (int i = 0; i <= half && strong; ++i) {
            std::set<Monomial> image;
            for (const auto& u : Lfull.by_degree[i]) image.insert(u.times_var(n - d, d - 2 * i));
            std::set<Monomial> target(Lfull.by_degree[d - i].begin(),
                                      Lfull.by_degree[d - i].end());
            if (image != target) strong = false;
        }
        report.strong = strong;
    }
    return report;
}

SqueezedPair squeeze_complex(const SimplicialComplex& complex, int d, std::uint64_t seed,
                             Field field) {
    return build_squeezed(U_set(complex, d, seed, field), d);
}

}  // namespace squeeze
