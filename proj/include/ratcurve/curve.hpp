#pragma once

#include <array>
#include <string>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/ideal.hpp"
#include "ratcurve/roots.hpp"

namespace ratcurve {

// Parameterization f = (f0 : f1 : f2) of a plane curve by binary forms of a
// common degree n. Row u of the coefficient matrix holds the coefficients of
// f_u, column p multiplying s^(n-p) t^p.
class CurveParam {
 public:
  CurveParam() = default;
  // Throws DegreeMismatch or DegreeTooSmall (n < 3).
  CurveParam(BinaryForm f0, BinaryForm f1, BinaryForm f2);

  int n() const { return n_; }
  const BinaryForm& f(int u) const { return f_[u]; }
  const Rat& a(int u, int p) const { return f_[u].coeff(p); }
  // f(s, t + c s): the same image curve, parameter moved by a shear.
  CurveParam sheared(const Rat& c) const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::array<BinaryForm, 3> f_;
};

struct ProperCertificate {
  // the specialization (s:t) at which the cross-forms have no common root
  Rat s, t;
  int specializations_tried = 0;
  int bezout_bound = 0;
};

// Throws CommonFactor, NotProper (including linearly dependent rows) or DegreeTooSmall.
ProperCertificate check_proper(const CurveParam& c);

// Exact image of (s:t), normalized with first nonzero coordinate 1.
PointPk evaluate(const CurveParam& c, const Rat& s, const Rat& t);
// Numeric image of a point of P^1, as a unit-norm vector.
std::vector<Complex> evaluate(const CurveParam& c, const P1Point& p);
std::vector<Complex> evaluate(const CurveParam& c, const Complex& s, const Complex& t);

// w_u = sum_p z_p a_{u,p}; throws PointInCenter when all w_u vanish.
PointPk apply_projection(const CurveParam& c, const std::vector<Rat>& z);
std::vector<Complex> apply_projection(const CurveParam& c, const std::vector<Complex>& z);

// Scales so the first coordinate of modulus above tol is 1.
std::vector<Complex> normalize_first(const std::vector<Complex>& z, const Real& tol);
std::vector<Complex> normalize_unit(const std::vector<Complex>& z);

}  // namespace ratcurve
