#pragma once

#include <vector>

#include "ratcurve/multipoly.hpp"

namespace ratcurve {

// Determinant of a square matrix of polynomials (fraction-free Bareiss).
MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m, const RingPtr& ring);

// Sylvester-matrix resultant of two polynomials given by coefficient lists in
// descending powers (formal degrees = size-1). The rows of g sit above the rows
// of f, so resultant(s-a, s-b) = b-a.
MultiPoly sylvester_resultant(const std::vector<MultiPoly>& f_desc, const std::vector<MultiPoly>& g_desc,
                              const RingPtr& ring);

// Resultant with respect to the variable `var`; coefficients may involve the
// other variables. Uses the Sylvester determinant up to degree 8 and the
// subresultant PRS beyond.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

// Same convention, always via the subresultant PRS (exposed for cross-checks).
MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, int var);

// Coefficients of f as a polynomial in var, index = power.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var);

}  // namespace ratcurve
