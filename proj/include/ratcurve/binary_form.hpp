#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratcurve/rational.hpp"
#include "ratcurve/upoly.hpp"

namespace ratcurve {

// Homogeneous form of degree n in (s,t); coeff(p) multiplies s^(n-p) t^p.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rat> coeffs);
  static BinaryForm zero(int degree);
  static BinaryForm s_power(int a, int b);  // s^a t^b

  int degree() const { return deg_; }
  bool is_zero() const;
  const Rat& coeff(int p) const { return c_.at(p); }
  const std::vector<Rat>& coeffs() const { return c_; }

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const Rat& c) const;
  bool operator==(const BinaryForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }
  BinaryForm pow(unsigned e) const;

  // Exact quotient; throws InexactDivision.
  BinaryForm exact_div(const BinaryForm& d) const;
  bool divides(const BinaryForm& f) const;  // *this | f

  // Primitive integer coefficients, first nonzero coefficient positive.
  BinaryForm normalized() const;
  bool associate_of(const BinaryForm& o) const;

  // t-adic and s-adic valuations (multiplicity of roots (1:0) and (0:1)).
  int t_valuation() const;
  int s_valuation() const;

  Rat eval(const Rat& s, const Rat& t) const;
  // f(1,u) and f(u,1) as univariate polynomials.
  UPoly dehomogenize_s() const;  // in u = t/s
  UPoly dehomogenize_t() const;  // in u = s/t
  static BinaryForm homogenize_t(const UPoly& p, int degree);  // p(s) -> t^deg p(s/t)
  static BinaryForm homogenize_s(const UPoly& p, int degree);  // p(u) -> s^deg p(t/s)

  // g(s,t) -> g(s, t + c s)
  BinaryForm shear(const Rat& c) const;

  std::string to_string() const;

 private:
  int deg_ = 0;
  std::vector<Rat> c_{Rat(0)};
};

// Coefficient transform of the shear: x'_j = sum_{i>=j} C(i,j) c^(i-j) x_i.
std::vector<Rat> shear_coefficients(const std::vector<Rat>& x, const Rat& c);

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);
BinaryForm binary_gcd(const std::vector<BinaryForm>& fs);

// f = c * prod g_i^{m_i}. The linear factors s and t are split off separately.
// Sorted by multiplicity (descending), then degree, then coefficients.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

}  // namespace ratcurve
