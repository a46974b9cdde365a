#include "squeeze/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace squeeze {

Monomial Monomial::from_exponents(std::vector<std::pair<int, int>> exps) {
    std::map<int, int> acc;
    for (auto [i, e] : exps) {
        if (i < 1) throw std::invalid_argument("variable index must be >= 1");
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) acc[i] += e;
    }
    Monomial m;
    m.exps_.assign(acc.begin(), acc.end());
    return m;
}

Monomial Monomial::from_index_sequence(const std::vector<int>& indices) {
    std::vector<std::pair<int, int>> exps;
    exps.reserve(indices.size());
    for (int i : indices) exps.emplace_back(i, 1);
    return from_exponents(std::move(exps));
}

int Monomial::degree() const {
    int d = 0;
    for (auto [i, e] : exps_) d += e;
    return d;
}

int Monomial::max_index() const {
    if (exps_.empty()) throw std::domain_error("m(1) undefined");
    return exps_.back().first;
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), var,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != exps_.end() && it->first == var) return it->second;
    return 0;
}

std::vector<int> Monomial::index_sequence() const {
    std::vector<int> seq;
    seq.reserve(degree());
    for (auto [i, e] : exps_)
        for (int k = 0; k < e; ++k) seq.push_back(i);
    return seq;
}

bool Monomial::is_squarefree() const {
    for (auto [i, e] : exps_)
        if (e > 1) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::vector<std::pair<int, int>> merged(exps_);
    merged.insert(merged.end(), rhs.exps_.begin(), rhs.exps_.end());
    return from_exponents(std::move(merged));
}

Monomial Monomial::times_var(int var, int power) const {
    return *this * from_exponents({{var, power}});
}

bool Monomial::divides(const Monomial& other) const {
    for (auto [i, e] : exps_)
        if (other.exponent(i) < e) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    if (!rhs.divides(*this)) throw std::domain_error("inexact monomial division");
    std::vector<std::pair<int, int>> exps;
    exps.reserve(exps_.size());
    for (auto [i, e] : exps_) {
        int r = e - rhs.exponent(i);
        if (r > 0) exps.emplace_back(i, r);
    }
    Monomial m;
    m.exps_ = std::move(exps);
    return m;
}

Monomial Monomial::without_var(int var) const {
    std::vector<std::pair<int, int>> exps;
    exps.reserve(exps_.size());
    for (auto [i, e] : exps_)
        if (i != var) exps.emplace_back(i, e);
    Monomial m;
    m.exps_ = std::move(exps);
    return m;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto [i, e] : exps_) {
        if (!first) out << '*';
        first = false;
        out << 'x' << i;
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

Monomial Monomial::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in monomial: " + text);
        return std::stol(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw std::invalid_argument("trailing input after '1': " + text);
        return unit();
    }

    std::vector<std::pair<int, int>> exps;
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("expected 'x' in monomial: " + text);
        ++pos;
        long idx = parse_int();
        long exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = parse_int();
        }
        if (idx < 1 || exp < 1)
            throw std::invalid_argument("variable index and exponent must be >= 1: " + text);
        exps.emplace_back(static_cast<int>(idx), static_cast<int>(exp));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*') throw std::invalid_argument("expected '*' in monomial: " + text);
        ++pos;
    }
    return from_exponents(std::move(exps));
}

Ordering degrevlex_cmp(const Monomial& u, const Monomial& v) {
    int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv ? Ordering::less : Ordering::greater;
    const auto& ue = u.exponents();
    const auto& ve = v.exponents();
    auto ui = ue.rbegin();
    auto vi = ve.rbegin();
    while (ui != ue.rend() || vi != ve.rend()) {
        int uvar = (ui != ue.rend()) ? ui->first : 0;
        int vvar = (vi != ve.rend()) ? vi->first : 0;
        if (uvar > vvar) return Ordering::less;     // u has the higher variable
        if (vvar > uvar) return Ordering::greater;  // v has the higher variable
        if (ui->second != vi->second)
            return ui->second > vi->second ? Ordering::less : Ordering::greater;
        ++ui;
        ++vi;
    }
    return Ordering::equal;
}

Ordering lex_cmp(const Monomial& u, const Monomial& v) {
    const auto& ue = u.exponents();
    const auto& ve = v.exponents();
    auto ui = ue.begin();
    auto vi = ve.begin();
    while (ui != ue.end() || vi != ve.end()) {
        int uvar = (ui != ue.end()) ? ui->first : 0;
        int vvar = (vi != ve.end()) ? vi->first : 0;
        if (uvar != 0 && (vvar == 0 || uvar < vvar)) {
            // v has exponent 0 at uvar, so the difference there is negative.
            return Ordering::greater;
        }
        if (vvar != 0 && (uvar == 0 || vvar < uvar)) return Ordering::less;
        if (ui->second != vi->second)
            return ui->second < vi->second ? Ordering::less : Ordering::greater;
        ++ui;
        ++vi;
    }
    return Ordering::equal;
}

bool dominates(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) throw std::domain_error("incomparable degrees");
    auto a = u.index_sequence();
    auto b = v.index_sequence();
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

namespace {

void gen_monomials(int n, int degree, int minvar, Monomial cur, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = minvar; i <= n; ++i) gen_monomials(n, degree - 1, i, cur.times_var(i), out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (degree == 0) {
        out.push_back(Monomial::unit());
        return out;
    }
    if (n < 1) return out;
    gen_monomials(n, degree, 1, Monomial::unit(), out);
    std::sort(out.begin(), out.end(), DegrevlexGreater{});
    return out;
}

}  // namespace squeeze
