#pragma once

#include <string>
#include <vector>

#include "ratcurve/curve.hpp"
#include "ratcurve/ideal.hpp"

namespace ratcurve {

// Implicit equation of the curve in K[w0,w1,w2], primitive, of degree n.
// Throws DegreeMismatch when the resultant does not reduce to degree n.
MultiPoly implicitize_oracle(const CurveParam& c);

// F(f0,f1,f2) == 0 as a form in s,t.
bool vanishes_on_curve(const MultiPoly& F, const CurveParam& c);

struct SingularVerdict {
  bool pass = false;
  int order = 0;         // number of leading derivative orders that vanish (the multiplicity), capped at deg F
  bool exact = false;    // decided by exact arithmetic
  double residual = 0;   // largest scaled residual among the orders required to vanish
  std::string detail;
};

// For each point: every partial of order < k vanishes (k = claimed
// multiplicity, default 2). Exact for rational points and for algebraic
// points whose coordinates reduce to zero modulo their minimal data;
// otherwise the scaled residual must be below tol.
std::vector<SingularVerdict> verify_singular(const MultiPoly& F, const std::vector<PointPk>& pts,
                                             const std::vector<int>& claimed, double tol = 1e-6);
SingularVerdict verify_singular(const MultiPoly& F, const PointPk& p, int k = 2, double tol = 1e-6);

}  // namespace ratcurve
