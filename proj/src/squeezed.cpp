#include "squeeze/squeezed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace squeeze {

ShiftedOrderIdeal ShiftedOrderIdeal::validate(int m, std::vector<Monomial> monomials) {
    if (m < 0) throw std::invalid_argument("variable count must be >= 0");
    std::sort(monomials.begin(), monomials.end(), degrevlex_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

    std::set<Monomial> members(monomials.begin(), monomials.end());
    auto require = [&](const Monomial& u, const std::string& why) {
        if (!members.count(u))
            throw std::invalid_argument("not a shifted order ideal: " + why + " (witness " +
                                        u.str() + ")");
    };

    require(Monomial::unit(), "1 missing");
    for (int i = 1; i <= m; ++i) require(Monomial::variable(i), "variable missing");

    int max_deg = 0;
    for (const auto& u : monomials) {
        if (!u.is_unit() && u.max_index() > m)
            throw std::invalid_argument("not a shifted order ideal: " + u.str() +
                                        " exceeds the variable count");
        max_deg = std::max(max_deg, u.degree());
    }

    for (const auto& u : monomials) {
        // divisor-closed
        for (auto [i, e] : u.exponents())
            require(u / Monomial::variable(i), "divisor of " + u.str() + " missing");
        // upward closed under dominance within the degree
        for (const auto& v : monomials_of_degree(m, u.degree()))
            if (dominates(u, v)) require(v, u.str() + " dominates a missing monomial");
    }

    ShiftedOrderIdeal U;
    U.m_ = m;
    U.mons_ = std::move(monomials);
    return U;
}

int ShiftedOrderIdeal::max_degree() const {
    int d = 0;
    for (const auto& u : mons_) d = std::max(d, u.degree());
    return d;
}

bool ShiftedOrderIdeal::contains(const Monomial& u) const {
    return std::binary_search(mons_.begin(), mons_.end(), u, degrevlex_less);
}

std::vector<long long> ShiftedOrderIdeal::degree_counts() const {
    std::vector<long long> counts(max_degree() + 1, 0);
    for (const auto& u : mons_) counts[u.degree()]++;
    return counts;
}

std::vector<int> facet_F(const Monomial& u, int d, int n) {
    int k = u.degree();
    if (k > (d + 1) / 2) throw std::invalid_argument("facet_F: monomial degree exceeds (d+1)/2");
    if (!u.is_unit() && u.max_index() > n - d - 1)
        throw std::invalid_argument("facet_F: monomial not within n-d-1 variables");

    std::vector<int> verts;
    auto idx = u.index_sequence();
    for (int t = 1; t <= k; ++t) {
        verts.push_back(idx[t - 1] + 2 * (t - 1));
        verts.push_back(idx[t - 1] + 2 * t - 1);
    }
    for (int v = n + 2 * k - d; v <= n; ++v) verts.push_back(v);
    if (static_cast<int>(verts.size()) != d + 1 || verts.back() > n)
        throw std::logic_error("facet_F produced an invalid facet");
    return verts;
}

SqueezedPair build_squeezed(const ShiftedOrderIdeal& U, int d) {
    if (d < 1) throw std::invalid_argument("squeezed ball needs d >= 1");
    if (U.max_degree() > (d + 1) / 2)
        throw std::invalid_argument("build_squeezed: degrees in U exceed (d+1)/2");
    int n = U.variable_count() + d + 1;
    std::vector<std::vector<int>> facets;
    facets.reserve(U.monomials().size());
    for (const auto& u : U.monomials()) facets.push_back(facet_F(u, d, n));

    SqueezedPair pair;
    pair.d = d;
    pair.n = n;
    pair.ball = SimplicialComplex::from_facets(n, facets);
    pair.sphere = boundary_of_pure(pair.ball);
    return pair;
}

MonomialIdeal ideal_I_of_U(const ShiftedOrderIdeal& U) {
    int m = U.variable_count();
    std::vector<Monomial> gens;
    for (int k = 1; k <= U.max_degree() + 1; ++k)
        for (const auto& w : monomials_of_degree(m, k)) {
            if (U.contains(w)) continue;
            bool minimal = true;
            for (auto [i, e] : w.exponents())
                if (!U.contains(w / Monomial::variable(i))) {
                    minimal = false;
                    break;
                }
            if (minimal) gens.push_back(w);
        }
    return minimalize(std::move(gens));
}

BettiTable squeezed_sphere_betti(const ShiftedOrderIdeal& U, int d) {
    if (U.max_degree() > d / 2)
        throw std::invalid_argument("squeezed_sphere_betti requires degrees <= d/2 (S-squeezed)");
    int n = U.variable_count() + d + 1;
    BettiTable quotient = betti_eliahou_kervaire(ideal_I_of_U(U)).quotient_view();

    // beta_{i,i+j} of the sphere quotient: the table of R/I(U) for j < d/2,
    // its dual beta_{n-d-i, n-i-j} for j > d/2, and the sum at j = d/2.
    // Every entry (p, q) of the source has 2(q - p) <= d, so each contributes
    // once directly and once dually.
    BettiTable sphere_quotient;
    for (const auto& [key, val] : quotient.entries()) {
        auto [p, q] = key;
        if (2 * (q - p) > d)
            throw std::logic_error("unexpected high strand in the Betti table of I(U)");
        sphere_quotient.add(p, q, val);
        sphere_quotient.add(n - d - p, n - q, val);
    }

    // Stored ideal-indexed; drop the (0,0) = 1 unit entry.
    BettiTable out;
    for (const auto& [key, val] : sphere_quotient.entries()) {
        auto [p, q] = key;
        if (p == 0) continue;
        out.add(p - 1, q, val);
    }
    return out;
}

ShiftedOrderIdeal lex_order_ideal(int m, const std::vector<long long>& degree_counts) {
    if (degree_counts.empty() || degree_counts[0] != 1)
        throw std::invalid_argument("degree_counts must start with 1");
    if (m > 0 && (degree_counts.size() < 2 || degree_counts[1] != m))
        throw std::invalid_argument("degree-1 count must equal the variable count");

    std::vector<Monomial> chosen = {Monomial::unit()};
    std::set<Monomial> prev = {Monomial::unit()};
    for (size_t k = 1; k < degree_counts.size(); ++k) {
        std::vector<Monomial> candidates;
        for (const auto& w : monomials_of_degree(m, static_cast<int>(k))) {
            bool ok = true;
            for (auto [i, e] : w.exponents())
                if (!prev.count(w / Monomial::variable(i))) {
                    ok = false;
                    break;
                }
            if (ok) candidates.push_back(w);
        }
        if (static_cast<long long>(candidates.size()) < degree_counts[k])
            throw std::invalid_argument("unrealizable degree counts");
        std::sort(candidates.begin(), candidates.end(), degrevlex_less);
        candidates.resize(degree_counts[k]);
        prev = {candidates.begin(), candidates.end()};
        chosen.insert(chosen.end(), candidates.begin(), candidates.end());
    }
    // The revlex segment is dominance-closed by construction; the validator
    // is the final arbiter of realizability.
    return ShiftedOrderIdeal::validate(m, std::move(chosen));
}

namespace {

// All dominance-up-closed subsets of the degree-k monomials that lie inside
// `allowed`.  Monomials are processed degrevlex-ascending, which lists every
// dominance-upper before the monomial itself.
void upsets_dfs(const std::vector<Monomial>& elems, const std::vector<std::vector<size_t>>& uppers,
                const std::vector<bool>& allowed, size_t pos, std::vector<bool>& in,
                std::vector<std::vector<Monomial>>& out) {
    if (pos == elems.size()) {
        std::vector<Monomial> chosen;
        for (size_t i = 0; i < elems.size(); ++i)
            if (in[i]) chosen.push_back(elems[i]);
        out.push_back(std::move(chosen));
        return;
    }
    // exclude elems[pos]
    in[pos] = false;
    upsets_dfs(elems, uppers, allowed, pos + 1, in, out);
    // include elems[pos] if allowed and all dominance-uppers are in
    if (allowed[pos]) {
        bool ok = true;
        for (size_t j : uppers[pos])
            if (!in[j]) {
                ok = false;
                break;
            }
        if (ok) {
            in[pos] = true;
            upsets_dfs(elems, uppers, allowed, pos + 1, in, out);
            in[pos] = false;
        }
    }
}

void enumerate_levels(int m, int max_deg, int k, std::vector<Monomial> acc,
                      const std::set<Monomial>& prev_level,
                      std::vector<std::vector<Monomial>>& out) {
    if (k > max_deg) {
        out.push_back(std::move(acc));
        return;
    }
    auto elems = monomials_of_degree(m, k);
    std::sort(elems.begin(), elems.end(), degrevlex_less);
    std::vector<bool> allowed(elems.size(), true);
    for (size_t i = 0; i < elems.size(); ++i)
        for (auto [v, e] : elems[i].exponents())
            if (!prev_level.count(elems[i] / Monomial::variable(v))) {
                allowed[i] = false;
                break;
            }
    std::vector<std::vector<size_t>> uppers(elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (dominates(elems[i], elems[j])) uppers[i].push_back(j);

    std::vector<std::vector<Monomial>> levels;
    std::vector<bool> in(elems.size(), false);
    upsets_dfs(elems, uppers, allowed, 0, in, levels);

    for (auto& level : levels) {
        std::vector<Monomial> next = acc;
        next.insert(next.end(), level.begin(), level.end());
        enumerate_levels(m, max_deg, k + 1, std::move(next),
                         {level.begin(), level.end()}, out);
    }
}

}  // namespace

std::vector<ShiftedOrderIdeal> enumerate_shifted_order_ideals(int m, int max_deg) {
    if (m > 4 || max_deg > 3)
        throw std::out_of_range("enumeration guarded at m <= 4, max_deg <= 3");
    if (m < 0 || max_deg < 0) throw std::invalid_argument("bad enumeration parameters");

    std::vector<ShiftedOrderIdeal> result;
    if (m >= 1 && max_deg == 0) return result;  // axiom (i) cannot hold

    std::vector<Monomial> base = {Monomial::unit()};
    std::set<Monomial> level1;
    for (int i = 1; i <= m; ++i) {
        base.push_back(Monomial::variable(i));
        level1.insert(Monomial::variable(i));
    }

    std::vector<std::vector<Monomial>> sets;
    if (max_deg <= 1 || m == 0) {
        sets.push_back(base);
    } else {
        enumerate_levels(m, max_deg, 2, base, level1, sets);
    }

    for (auto& mons : sets) result.push_back(ShiftedOrderIdeal::validate(m, std::move(mons)));
    std::sort(result.begin(), result.end(),
              [](const ShiftedOrderIdeal& a, const ShiftedOrderIdeal& b) {
                  if (a.monomials().size() != b.monomials().size())
                      return a.monomials().size() < b.monomials().size();
                  return std::lexicographical_compare(a.monomials().begin(), a.monomials().end(),
                                                      b.monomials().begin(), b.monomials().end(),
                                                      degrevlex_less);
              });
    return result;
}

Chara5Report chara5_condition_check(const MonomialIdeal& ideal, int n, int d) {
    if (!is_strongly_stable(ideal))
        throw std::domain_error("chara5_condition_check requires a strongly stable ideal");
    int nd = n - d;
    if (nd < 1) throw std::invalid_argument("need n - d >= 1");

    std::vector<Monomial> restricted;
    for (const auto& g : ideal.generators())
        if (g.is_unit() || g.max_index() <= nd) restricted.push_back(g);
    MonomialIdeal A(std::move(restricted));

    Chara5Report report;
    report.max_index_matches = ideal.max_index() == nd;
    report.top_degree_vanishes = standard_monomials(A, nd, d + 1).empty();
    report.linear_dim_matches =
        static_cast<int>(standard_monomials(A, nd, 1).size()) == nd;

    report.lefschetz_maps_iso = true;
    for (int i = 0; i <= d / 2 && report.lefschetz_maps_iso; ++i) {
        auto low = standard_monomials(A, nd, i);
        auto high = standard_monomials(A, nd, d - i);
        std::set<Monomial> image;
        for (const auto& u : low) image.insert(u.times_var(nd, d - 2 * i));
        std::set<Monomial> target(high.begin(), high.end());
        if (image != target) report.lefschetz_maps_iso = false;
    }
    return report;
}

SimplicialComplex exterior_shifted_ball(const ShiftedOrderIdeal& U, int d) {
    if (U.max_degree() > (d + 1) / 2)
        throw std::invalid_argument("exterior_shifted_ball: degrees in U exceed (d+1)/2");
    int n = U.variable_count() + d + 1;
    std::vector<std::vector<int>> facets;
    for (const auto& u : U.monomials()) {
        int k = u.degree();
        std::vector<int> verts;
        auto idx = u.index_sequence();
        for (int t = 1; t <= k; ++t) verts.push_back(idx[t - 1] + t - 1);
        for (int v = n - d + k; v <= n; ++v) verts.push_back(v);  // last d+1-k vertices
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SqueezeCountReport squeeze_counts_relation_check(int d, int n) {
    int m = n - d - 1;
    if (m < 0 || d < 2) throw std::invalid_argument("need d >= 2 and n >= d + 1");
    SqueezeCountReport report;
    // sq(d-1, n-1): shifted order ideals in (n-1)-(d-1)-1 = n-d-1 variables of
    // degree at most floor(((d-1)+1)/2) = floor(d/2).
    report.sq_count =
        static_cast<long long>(enumerate_shifted_order_ideals(m, d / 2).size());
    // ssq(d, n): same parameter pair.
    report.ssq_count =
        static_cast<long long>(enumerate_shifted_order_ideals(n - d - 1, d / 2).size());
    return report;
}

}  // namespace squeeze
