#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "ratcurve/ideal.hpp"
#include "ratcurve/linalg.hpp"

namespace ratcurve {

// The affine chart {l = 1} of P^k for a linear form l = sum c_i x_i. Affine
// coordinates are the projective variables other than the pivot (first i
// with c_i != 0), under their original names.
class Chart {
 public:
  Chart(RingPtr proj, std::vector<Rat> form);
  static Chart variable(RingPtr proj, int i);
  // A chart whose hyperplane misses V(I): tries x_0, x_1, ... then
  // x_0 + c x_1 + c^2 x_2 + ... for c = 2, 3, ...
  static Chart choose(const Ideal& I);

  const RingPtr& proj_ring() const { return proj_; }
  const RingPtr& aff_ring() const { return aff_; }
  int pivot() const { return pivot_; }
  const std::vector<Rat>& form() const { return form_; }
  MultiPoly form_poly() const;

  MultiPoly to_affine(const MultiPoly& p) const;
  Ideal to_affine(const Ideal& I) const;
  // Homogenization with respect to l (the result is saturated when the input
  // is a grevlex Groebner basis, which this computes).
  MultiPoly to_projective(const MultiPoly& q) const;
  Ideal to_projective(const Ideal& J) const;
  // The projective coordinates x_i as affine polynomials.
  std::vector<MultiPoly> coordinate_functions() const;

 private:
  RingPtr proj_, aff_;
  std::vector<Rat> form_;
  int pivot_ = 0;
};

// A = K[y]/J for a zero-dimensional affine ideal J, with the basis of
// standard monomials of the grevlex Groebner basis.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const Ideal& J);

  int dim() const { return static_cast<int>(basis_.size()); }
  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& gb() const { return gb_; }
  const std::vector<Mono>& basis() const { return basis_; }

  QVec coords(const MultiPoly& p) const;
  MultiPoly element(const QVec& v) const;
  QVec one() const;
  // Matrix of multiplication by p (column j = coords(p * basis_j)).
  QMatrix mult_matrix(const MultiPoly& p) const;
  const QMatrix& var_matrix(int i) const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gb_;
  std::vector<Mono> basis_;
  std::unordered_map<Mono, int, MonoHash> index_;
  mutable std::vector<QMatrix> var_mats_;
  mutable std::vector<bool> var_done_;
};

// Affine radical via Seidenberg: adjoin squarefree parts of the minimal
// polynomials of the coordinate multiplications.
Ideal affine_radical(const Ideal& J);

// A linear form separating the points of a reduced algebra (minimal
// polynomial of full degree). Tries single variables, then sum c^i y_i.
MultiPoly separating_element(const QuotientAlgebra& A);

// Evaluates a univariate polynomial at a ring element.
MultiPoly eval_upoly(const UPoly& u, const MultiPoly& x);

// Inverse of a modulo m (gcd(a, m) = 1 required).
UPoly inverse_mod(const UPoly& a, const UPoly& m);

// Dimension of the intersection of subspaces of Q^n given by spanning sets.
int intersection_dim(const std::vector<std::vector<QVec>>& spans, int n);
// Basis of the intersection of two subspaces (spanning sets) of Q^n.
std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b, int n);
// Column span basis of the ideal generated by `gens` inside A.
std::vector<QVec> ideal_span(const QuotientAlgebra& A, const std::vector<MultiPoly>& gens);

// The substitution v_i -> sum_j L[i][j] y_j (L[i][j] in A) from K[v_0..v_m]
// to A[y_1..y_r], one degree at a time.
class LinearFormEvaluator {
 public:
  LinearFormEvaluator(const QuotientAlgebra& A, const std::vector<std::vector<QVec>>& L, RingPtr vring);
  // Basis of the degree-d kernel; `rank` receives the rank of the map.
  std::vector<MultiPoly> kernel(int d, int* rank = nullptr);
  // Rank of the degree-d map modulo a large prime (a lower bound for the rank).
  int rank_modp(int d);
  // Number of degree-d monomials in the v's.
  int columns(int d);
  const RingPtr& ring() const { return vring_; }

 private:
  using Vals = std::map<Mono, QVec>;  // y-monomial -> value in A
  const QuotientAlgebra& A_;
  RingPtr vring_;
  int nv_ = 0, ny_ = 0;
  std::vector<std::vector<QMatrix>> M_;  // multiplication by L[i][j]
  int degree_ = 0;
  std::vector<std::pair<Mono, Vals>> cur_;  // all v-monomials of degree_
  void advance();
  QMatrix matrix(int d);
};

enum class KernelStop {
  // zero-dimensional image: stop at the first d with rank(d) = rank(d-1)
  Points,
  // the ideal generated so far reproduces the kernel in the next two degrees
  Persistence,
};

// The kernel ideal, generated degree by degree until the stop rule holds.
Ideal kernel_ideal(LinearFormEvaluator& ev, KernelStop rule, int max_degree = 48);

}  // namespace ratcurve
