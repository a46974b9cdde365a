#include "squeeze/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace squeeze {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

int parse_header(const std::string& line, const std::string& key) {
    if (line.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("expected header '" + key + "=<int>', got: " + line);
    return std::stoi(line.substr(key.size() + 1));
}

}  // namespace

MonomialIdeal read_ideal_text(const std::string& text) {
    std::vector<Monomial> gens;
    for (const auto& line : content_lines(text)) gens.push_back(Monomial::parse(line));
    return minimalize(std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
    return read_ideal_text(read_file(path));
}

std::string write_ideal_text(const MonomialIdeal& ideal) {
    std::ostringstream out;
    for (const auto& g : display_sorted(ideal.generators())) out << g.str() << '\n';
    return out.str();
}

ShiftedOrderIdeal read_order_ideal_text(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty U file");
    int m = parse_header(lines[0], "m");
    std::vector<Monomial> mons;
    for (size_t i = 1; i < lines.size(); ++i) mons.push_back(Monomial::parse(lines[i]));
    return ShiftedOrderIdeal::validate(m, std::move(mons));
}

ShiftedOrderIdeal read_order_ideal_file(const std::string& path) {
    return read_order_ideal_text(read_file(path));
}

std::string write_order_ideal_text(const ShiftedOrderIdeal& U) {
    std::ostringstream out;
    out << "m=" << U.variable_count() << '\n';
    for (const auto& u : display_sorted(U.monomials())) out << u.str() << '\n';
    return out.str();
}

SimplicialComplex read_facets_text(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty facet file");
    int n = parse_header(lines[0], "n");
    std::vector<std::vector<int>> facets;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::vector<int> verts;
        int v;
        while (in >> v) verts.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad facet line: " + lines[i]);
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex read_facets_file(const std::string& path) {
    return read_facets_text(read_file(path));
}

std::string write_facets_text(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "n=" << complex.vertex_count() << '\n';
    for (const auto& f : complex.facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Monomial> display_sorted(std::vector<Monomial> mons) {
    std::sort(mons.begin(), mons.end(), [](const Monomial& u, const Monomial& v) {
        if (u.degree() != v.degree()) return u.degree() < v.degree();
        return lex_less(v, u);
    });
    return mons;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace squeeze
