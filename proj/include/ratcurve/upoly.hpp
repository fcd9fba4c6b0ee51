#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratcurve/rational.hpp"

namespace ratcurve {

// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);
  static UPoly monomial(const Rat& c, int deg);
  static UPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& lc() const { return c_.back(); }
  Rat coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rat& s) const;
  UPoly pow(unsigned e) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  // Euclidean division; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  // Integer coefficients, content 1, positive leading coefficient.
  UPoly primitive() const;
  UPoly derivative() const;
  Rat eval(const Rat& v) const;
  UPoly compose(const UPoly& inner) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0)=0
UPoly squarefree_part(const UPoly& f);      // monic

// Yun's algorithm: f = lc * prod g_i^i, factors monic, pairwise coprime,
// listed by increasing multiplicity; only nonconstant factors are returned.
std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& f);

// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly& f);

}  // namespace ratcurve
