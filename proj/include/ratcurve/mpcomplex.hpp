#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "ratcurve/rational.hpp"

namespace ratcurve {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (in bits) for newly created Real values and
// restores the previous one on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

int current_precision_bits();

Real to_real(const Rat& q);
Rat to_rat(const Real& x);  // exact value of the binary float
double to_double(const Real& x);
Real two_pow(int e);  // 2^e
// Decimal rendering with `digits` significant digits ("0" for zero).
std::string format_real(const Real& x, int digits);

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
  static Complex from_rat(const Rat& r, const Rat& i = 0) { return Complex(to_real(r), to_real(i)); }

  Complex operator+(const Complex& o) const { return Complex(re + o.re, im + o.im); }
  Complex operator-(const Complex& o) const { return Complex(re - o.re, im - o.im); }
  Complex operator-() const { return Complex(-re, -im); }
  Complex operator*(const Complex& o) const { return Complex(re * o.re - im * o.im, re * o.im + im * o.re); }
  Complex operator*(const Real& s) const { return Complex(re * s, im * s); }
  Complex operator/(const Complex& o) const;
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex conj() const { return Complex(re, -im); }
  Real norm2() const { return re * re + im * im; }
  Real abs() const;
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string(int digits = 12) const;
};

Real abs(const Complex& z);
Complex eval_poly(const std::vector<Real>& coeffs_low_to_high, const Complex& z);

}  // namespace ratcurve
