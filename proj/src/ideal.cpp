#include "squeeze/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace squeeze {

void BettiTable::add(int i, int j, long long count) {
    if (count < 0) throw std::invalid_argument("negative Betti count");
    if (count == 0) return;
    entries_[{i, j}] += count;
}

long long BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::proj_dim() const {
    int p = -1;
    for (const auto& [key, val] : entries_)
        if (val != 0) p = std::max(p, key.first);
    return p;
}

BettiTable BettiTable::quotient_view() const {
    BettiTable q;
    q.add(0, 0, 1);
    for (const auto& [key, val] : entries_) q.add(key.first + 1, key.second, val);
    return q;
}

bool BettiTable::dominated_by(const BettiTable& rhs) const {
    for (const auto& [key, val] : entries_)
        if (val > rhs.get(key.first, key.second)) return false;
    return true;
}

std::string BettiTable::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, val] : entries_) {
        if (!first) out << ", ";
        first = false;
        out << "b(" << key.first << "," << key.second << ")=" << val;
    }
    return out.str();
}

void MonomialIdeal::assign(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), degrevlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < i && !redundant; ++j)
            if (gens[j].divides(gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    gens_ = std::move(minimal);
}

bool MonomialIdeal::contains(const Monomial& u) const {
    for (const auto& g : gens_)
        if (g.divides(u)) return true;
    return false;
}

int MonomialIdeal::max_index() const {
    int m = 0;
    for (const auto& g : gens_)
        if (!g.is_unit()) m = std::max(m, g.max_index());
    return m;
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal minimalize(std::vector<Monomial> gens) { return MonomialIdeal(std::move(gens)); }

bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators()) {
        for (auto [j, e] : g.exponents()) {
            for (int i = 1; i < j; ++i) {
                Monomial swapped = (g / Monomial::variable(j)).times_var(i);
                if (!ideal.contains(swapped)) return false;
            }
        }
    }
    return true;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators()) {
        if (!g.is_squarefree()) return false;
        for (auto [j, e] : g.exponents()) {
            for (int i = 1; i < j; ++i) {
                if (g.exponent(i) > 0) continue;
                Monomial swapped = (g / Monomial::variable(j)).times_var(i);
                if (!ideal.contains(swapped)) return false;
            }
        }
    }
    return true;
}

MonomialIdeal colon_saturate_by_last(const MonomialIdeal& ideal, int var) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.without_var(var));
    return minimalize(std::move(gens));
}

MonomialIdeal degree_part_ideal(const MonomialIdeal& ideal, int n, int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<Monomial> gens;
    for (const auto& u : monomials_of_degree(n, d))
        if (ideal.contains(u)) gens.push_back(u);
    return minimalize(std::move(gens));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int n, int degree) {
    std::vector<Monomial> out;
    for (const auto& u : monomials_of_degree(n, degree))
        if (!ideal.contains(u)) out.push_back(u);
    return out;
}

std::vector<long long> hilbert_function_quotient(const MonomialIdeal& ideal, int n,
                                                 int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("degree bound must be >= 0");
    std::vector<long long> counts;
    counts.reserve(max_degree + 1);
    // Standard monomials form an order ideal: build level by level.
    std::set<Monomial> level;
    if (!ideal.contains(Monomial::unit())) level.insert(Monomial::unit());
    counts.push_back(static_cast<long long>(level.size()));
    for (int d = 1; d <= max_degree; ++d) {
        std::set<Monomial> next;
        for (const auto& u : level)
            for (int i = 1; i <= n; ++i) {
                Monomial v = u.times_var(i);
                if (!ideal.contains(v)) next.insert(v);
            }
        counts.push_back(static_cast<long long>(next.size()));
        level = std::move(next);
    }
    return counts;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

namespace {

BettiTable betti_from_column_sizes(const std::vector<Monomial>& gens,
                                   const std::vector<long long>& sizes) {
    BettiTable table;
    for (size_t t = 0; t < gens.size(); ++t) {
        int j = gens[t].degree();
        long long s = sizes[t];
        if (s < 0) {
            // Only reachable for a unit generator: contributes a single free summand.
            table.add(0, j, 1);
            continue;
        }
        for (long long i = 0; i <= s; ++i) table.add(static_cast<int>(i), static_cast<int>(i) + j, binomial(s, i));
    }
    return table;
}

}  // namespace

BettiTable betti_eliahou_kervaire(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal))
        throw std::domain_error("Eliahou-Kervaire formula requires a strongly stable ideal");
    std::vector<long long> sizes;
    sizes.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        sizes.push_back(g.is_unit() ? -1 : g.max_index() - 1);
    return betti_from_column_sizes(ideal.generators(), sizes);
}

BettiTable betti_squarefree_stable(const MonomialIdeal& ideal) {
    if (!is_squarefree_strongly_stable(ideal))
        throw std::domain_error(
            "squarefree Betti formula requires a squarefree strongly stable ideal");
    std::vector<long long> sizes;
    sizes.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        sizes.push_back(g.is_unit() ? -1 : g.max_index() - g.degree());
    return betti_from_column_sizes(ideal.generators(), sizes);
}

BettiTable betti_linear_quotients(const std::vector<Monomial>& ordered_gens,
                                  const std::vector<int>& set_sizes) {
    if (ordered_gens.size() != set_sizes.size())
        throw std::invalid_argument("generator and set-size sequences differ in length");
    std::vector<long long> sizes(set_sizes.begin(), set_sizes.end());
    return betti_from_column_sizes(ordered_gens, sizes);
}

bool equal_up_to_degree(const MonomialIdeal& a, const MonomialIdeal& b, int n, int max_degree) {
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& u : monomials_of_degree(n, d))
            if (a.contains(u) != b.contains(u)) return false;
    return true;
}

}  // namespace squeeze
