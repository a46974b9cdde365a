#ifndef SQUEEZE_IO_HPP
#define SQUEEZE_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squeeze/ideal.hpp"
#include "squeeze/simplicial.hpp"
#include "squeeze/squeezed.hpp"

namespace squeeze {

inline constexpr const char* kVersion = "squeeze 0.1.0";

// Ideal file: one generator per line in the monomial grammar; '#' starts a
// comment line; blank lines ignored.
MonomialIdeal read_ideal_text(const std::string& text);
MonomialIdeal read_ideal_file(const std::string& path);
std::string write_ideal_text(const MonomialIdeal& ideal);

// U file: header line "m=<int>", then one monomial per line ("1" included).
ShiftedOrderIdeal read_order_ideal_text(const std::string& text);
ShiftedOrderIdeal read_order_ideal_file(const std::string& path);
std::string write_order_ideal_text(const ShiftedOrderIdeal& U);

// Facet file: header line "n=<int>", then one facet per line as
// space-separated vertex integers.
SimplicialComplex read_facets_text(const std::string& text);
SimplicialComplex read_facets_file(const std::string& path);
std::string write_facets_text(const SimplicialComplex& complex);

std::string read_file(const std::string& path);

// Presentation order for monomial lists: degree ascending, lex descending
// within a degree (x1^2, x1*x2, x2^2, ...).
std::vector<Monomial> display_sorted(std::vector<Monomial> mons);

// FNV-1a 64-bit content hash, hex-encoded; embedded in reports.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace squeeze

#endif
