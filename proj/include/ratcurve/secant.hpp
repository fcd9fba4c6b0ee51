#pragma once

#include <memory>
#include <vector>

#include "ratcurve/curve.hpp"
#include "ratcurve/ideal.hpp"
#include "ratcurve/zerodim.hpp"

namespace ratcurve {

// The (n-k+4) x (n+1) matrix M_k: n-k+1 shifted bands (x_0 ... x_k) over the
// three coefficient rows of the curve. Entries live in K[x0..xk].
struct SecantMatrix {
  int n = 0, k = 0;
  RingPtr ring;
  std::vector<std::vector<MultiPoly>> m;
  int rows() const { return static_cast<int>(m.size()); }
  int cols() const { return n + 1; }
};

// Throws KOutOfRange unless 2 <= k <= n-1.
SecantMatrix build_Mk(const CurveParam& c, int k);
// Number of (n-k+3)-minors of M_k.
Int minor_count(int n, int k);
// Every (n-k+3)-minor of M_k (vanishing ones included), in a fixed order.
std::vector<MultiPoly> minors_Xk(const CurveParam& c, int k);
// All (n-k+3)-minors of M_k, graded-linearly interreduced.
Ideal ideal_Xk(const CurveParam& c, int k);

// Ideal of the rational normal curve C_n in K[z0..zn] (2x2 minors).
Ideal rnc_ideal(int n);

// Ideal of the image of V(Z) under the parameter shear t -> t + c s
// (x'_j = sum_{i>=j} C(i,j) c^(i-j) x_i).
Ideal shear_points(const Ideal& Z, const Rat& c);
// A shear c in 0, 1, -1, 2, ... after which no point of V(Z) has x_0 = 0.
Rat choose_shear(const Ideal& Z);

// The (k-1)-spaces spanned by the forms of a zero-dimensional Z in K[x0..xk],
// in the sheared parameter (choose_shear) where x'_0 = 1 on every point.
// With A the coordinate algebra of that chart, z'_p = sum_q fiber()[p][q] y_q
// parameterizes the space over each point (y free, k coordinates).
class SecantFibers {
 public:
  // Throws EmptyScheme, NotZeroDimensional.
  SecantFibers(int n, const Ideal& Z, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  const Rat& shear() const { return c_; }
  const Ideal& sheared_points() const { return sheared_; }
  const QuotientAlgebra& algebra() const { return *A_; }
  // x'_0 .. x'_k as elements of A (x'_0 = 1)
  const std::vector<QVec>& x() const { return x_; }
  const QMatrix& x_matrix(int i) const { return xmat_[i]; }
  const std::vector<std::vector<QVec>>& fiber() const { return L_; }

 private:
  int n_, k_;
  Rat c_;
  Ideal sheared_;
  std::unique_ptr<QuotientAlgebra> A_;
  std::vector<QVec> x_;
  std::vector<QMatrix> xmat_;
  std::vector<std::vector<QVec>> L_;
};

// Ideal in K[z0..zn] of the union of the (k-1)-spaces spanned by the roots of
// the forms in V(Z), Z in K[x0..xk] zero-dimensional (scheme structure kept).
Ideal contracted_lines_ideal(const CurveParam& c, const Ideal& Z, int k);
Ideal contracted_lines_ideal(int n, const Ideal& Z, int k);

}  // namespace ratcurve
