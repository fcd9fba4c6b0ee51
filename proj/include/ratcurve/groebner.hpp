#pragma once

#include <vector>

#include "ratcurve/multipoly.hpp"

namespace ratcurve {

// Reduced Groebner basis (monic generators, sorted by increasing leading
// monomial) of the ideal generated by `gens`. Buchberger with the
// Gebauer-Moeller criteria and sugar selection; arithmetic runs over Z with
// content removal. The unit ideal yields {1}; the zero ideal yields {}.
std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, const MonomialOrder& ord);

// Fully reduced remainder of p modulo the set G (any generating set; unique
// when G is a Groebner basis for ord).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& G, const MonomialOrder& ord);

// True when every S-polynomial of G reduces to zero.
bool is_groebner(const std::vector<MultiPoly>& G, const MonomialOrder& ord);

}  // namespace ratcurve
