#include "squeeze/operators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace squeeze {

ShiftSequence::ShiftSequence(std::vector<long long> prefix, Tail tail, long long step)
    : prefix_(std::move(prefix)), tail_(tail), step_(step) {
    if (prefix_.empty()) throw std::invalid_argument("shift sequence needs a nonempty prefix");
    for (size_t k = 1; k < prefix_.size(); ++k)
        if (prefix_[k] < prefix_[k - 1])
            throw std::invalid_argument("shift sequence must be nondecreasing");
    if (tail_ == Tail::arithmetic && step_ < 0)
        throw std::invalid_argument("shift sequence must be nondecreasing");
}

long long ShiftSequence::at(size_t k) const {
    if (k < prefix_.size()) return prefix_[k];
    size_t extra = k - (prefix_.size() - 1);
    if (tail_ == Tail::constant) return prefix_.back();
    return prefix_.back() + step_ * static_cast<long long>(extra);
}

ShiftSequence ShiftSequence::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2) throw std::invalid_argument("shift syntax: e.g. 0,2,4,+2 or 0,1,2,=");

    std::string tail = parts.back();
    parts.pop_back();
    std::vector<long long> prefix;
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("empty entry in shift sequence");
        prefix.push_back(std::stoll(p));
    }
    if (tail == "=") return constant_tail(std::move(prefix));
    if (!tail.empty() && tail[0] == '+')
        return arithmetic_tail(std::move(prefix), std::stoll(tail.substr(1)));
    throw std::invalid_argument("shift tail must be '=' or '+<step>': " + tail);
}

std::string ShiftSequence::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < prefix_.size(); ++k) {
        if (k) out << ',';
        out << prefix_[k];
    }
    if (tail_ == Tail::constant)
        out << ",=";
    else
        out << ",+" << step_;
    return out.str();
}

Monomial alpha_a(const Monomial& u, const ShiftSequence& a) {
    if (a.at(0) != 0) throw std::invalid_argument("alpha^a requires a_0 = 0");
    auto seq = u.index_sequence();
    for (size_t k = 0; k < seq.size(); ++k) seq[k] += static_cast<int>(a.at(k));
    return Monomial::from_index_sequence(seq);
}

MonomialIdeal apply_operator_to_ideal(const MonomialIdeal& ideal,
                                      const std::function<Monomial(const Monomial&)>& op) {
    std::vector<Monomial> images;
    images.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) images.push_back(op(g));
    return minimalize(std::move(images));
}

std::set<int> quotient_set(const Monomial& u, const ShiftSequence& a) {
    if (u.is_unit()) throw std::domain_error("set(alpha^a(1)) undefined");
    if (a.at(0) != 0) throw std::invalid_argument("alpha^a requires a_0 = 0");
    auto idx = u.index_sequence();
    int d = static_cast<int>(idx.size());
    std::set<int> out;
    for (int l = 0; l < d; ++l) {
        long long lo = (l == 0 ? 1 : idx[l - 1]) + a.at(l);
        long long hi = idx[l] + a.at(l);
        for (long long k = lo; k < hi; ++k) out.insert(static_cast<int>(k));
    }
    return out;
}

PolarizedMonomial polarize(const Monomial& u) {
    PolarizedMonomial p;
    for (auto [i, e] : u.exponents())
        for (int j = 1; j <= e; ++j) p.factors.emplace_back(i, j);
    return p;
}

std::vector<Monomial> flatten_polarized(const std::vector<PolarizedMonomial>& mons) {
    std::map<std::pair<int, int>, int> index;
    for (const auto& p : mons)
        for (const auto& f : p.factors) index[f] = 0;
    int next = 1;
    for (auto& [pair, id] : index) id = next++;

    std::vector<Monomial> out;
    out.reserve(mons.size());
    for (const auto& p : mons) {
        std::vector<int> seq;
        seq.reserve(p.factors.size());
        for (const auto& f : p.factors) seq.push_back(index.at(f));
        out.push_back(Monomial::from_index_sequence(seq));
    }
    return out;
}

MonomialIdeal polarize_ideal_flattened(const MonomialIdeal& ideal) {
    std::vector<PolarizedMonomial> imgs;
    imgs.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) imgs.push_back(polarize(g));
    return minimalize(flatten_polarized(imgs));
}

Monomial sigma_a(const Monomial& u, const ShiftSequence& a) {
    // 1-based: q(j) = a_j - 1 for j >= 1.
    auto q = [&](long long j) -> long long {
        long long v = a.at(static_cast<size_t>(j - 1)) - 1;
        if (v < 0) throw std::domain_error("sigma_a undefined for input");
        return v;
    };

    std::vector<std::pair<int, int>> out;
    long long pos = 1;  // next unused output variable
    for (auto [var, exp] : u.exponents()) {
        (void)var;
        long long r = exp;
        while (r > 0 && r >= q(pos)) {
            if (q(pos) == 0) throw std::domain_error("sigma_a undefined for input");
            out.emplace_back(static_cast<int>(pos), static_cast<int>(q(pos)));
            r -= q(pos);
            ++pos;
        }
        if (r > 0) out.emplace_back(static_cast<int>(pos), static_cast<int>(r));
        ++pos;  // block ends here; the next exponent starts a fresh block
    }
    return Monomial::from_exponents(std::move(out));
}

}  // namespace squeeze
