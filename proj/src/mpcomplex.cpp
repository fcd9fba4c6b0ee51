#include "ratcurve/mpcomplex.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace ratcurve {

namespace {
unsigned bits_to_digits10(int bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398)) + 1; }

// the backend default is only 20 digits
const bool kDefaultSet = [] {
  Real::default_precision(bits_to_digits10(256));
  return true;
}();
}  // namespace

PrecisionGuard::PrecisionGuard(int bits) : saved_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

int current_precision_bits() { return static_cast<int>(std::ceil(Real::default_precision() * 3.32192809489)); }

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rat to_rat(const Real& x) {
  Rat q;
  if (!mpfr_number_p(x.backend().data())) throw MathError("NonFinite", "cannot convert a non-finite float");
  mpfr_exp_t e;
  mpz_class m;
  e = mpfr_get_z_2exp(m.get_mpz_t(), x.backend().data());
  q = m;
  if (e > 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else if (e < 0)
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  q.canonicalize();
  return q;
}

double to_double(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

Real two_pow(int e) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

std::string format_real(const Real& x, int digits) {
  if (x == 0) return "0";
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

Complex Complex::operator/(const Complex& o) const {
  Real d = o.re * o.re + o.im * o.im;
  return Complex((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d);
}

Real Complex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

Real abs(const Complex& z) { return z.abs(); }

std::string Complex::to_string(int digits) const {
  // parts below half the working precision relative to |z| print as 0
  const Real cut = abs() * two_pow(-static_cast<int>(re.precision() * 3.32 / 2));
  const Real a = boost::multiprecision::abs(re) <= cut ? Real(0) : re;
  const Real b = boost::multiprecision::abs(im) <= cut ? Real(0) : im;
  if (b == 0) return format_real(a, digits);
  std::string i = format_real(boost::multiprecision::abs(b), digits) + "i";
  if (a == 0) return (b < 0 ? "-" : "") + i;
  return format_real(a, digits) + (b < 0 ? "-" : "+") + i;
}

Complex eval_poly(const std::vector<Real>& c, const Complex& z) {
  Complex acc;
  for (size_t k = c.size(); k-- > 0;) {
    acc = acc * z;
    acc.re += c[k];
  }
  return acc;
}

}  // namespace ratcurve
