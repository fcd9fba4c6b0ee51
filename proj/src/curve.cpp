#include "ratcurve/curve.hpp"

#include "ratcurve/linalg.hpp"

namespace ratcurve {

CurveParam::CurveParam(BinaryForm f0, BinaryForm f1, BinaryForm f2) : f_{std::move(f0), std::move(f1), std::move(f2)} {
  n_ = f_[0].degree();
  if (f_[1].degree() != n_ || f_[2].degree() != n_)
    throw MathError("DegreeMismatch", "components have different degrees");
  if (n_ < 3) throw MathError("DegreeTooSmall", "degree must be at least 3");
}

CurveParam CurveParam::sheared(const Rat& c) const {
  return CurveParam(f_[0].shear(c), f_[1].shear(c), f_[2].shear(c));
}

std::string CurveParam::to_string() const {
  return "(" + f_[0].to_string() + ", " + f_[1].to_string() + ", " + f_[2].to_string() + ")";
}

ProperCertificate check_proper(const CurveParam& c) {
  const int n = c.n();
  if (n < 3) throw MathError("DegreeTooSmall", "degree must be at least 3");
  BinaryForm g = binary_gcd(std::vector<BinaryForm>{c.f(0), c.f(1), c.f(2)});
  if (g.degree() > 0) throw MathError("CommonFactor", "components share the factor " + g.to_string());
  QMatrix a(3, n + 1);
  for (int u = 0; u < 3; ++u)
    for (int p = 0; p <= n; ++p) a(u, p) = c.a(u, p);
  if (rank(a) < 3) throw MathError("NotProper", "image is contained in a line");
  ProperCertificate cert;
  // parameters with a second preimage or a ramification lie over singular
  // points; their number is at most sum m_P(m_P - 1) <= (n-1)(n-2)
  cert.bezout_bound = (n - 1) * (n - 2);
  for (int j = 0; j <= cert.bezout_bound; ++j) {
    Rat s0 = 1, t0 = j;
    ++cert.specializations_tried;
    Rat v[3];
    for (int u = 0; u < 3; ++u) v[u] = c.f(u).eval(s0, t0);
    BinaryForm line(1, {-t0, s0});  // s0*t - t0*s vanishes at (s0:t0)
    std::vector<BinaryForm> cross;
    for (int u = 0; u < 3; ++u)
      for (int w = u + 1; w < 3; ++w) {
        BinaryForm num = c.f(w) * v[u] - c.f(u) * v[w];
        if (num.is_zero()) continue;
        cross.push_back(num.exact_div(line));
      }
    BinaryForm h = binary_gcd(cross);
    if (h.degree() == 0) {
      cert.s = s0;
      cert.t = t0;
      return cert;
    }
  }
  throw MathError("NotProper", "parameterization is not generically injective");
}

PointPk evaluate(const CurveParam& c, const Rat& s, const Rat& t) {
  if (s == 0 && t == 0) throw MathError("IndeterminatePoint", "(0:0) is not a point");
  std::vector<Rat> w{c.f(0).eval(s, t), c.f(1).eval(s, t), c.f(2).eval(s, t)};
  if (w[0] == 0 && w[1] == 0 && w[2] == 0) throw MathError("IndeterminatePoint", "all components vanish");
  return PointPk::from_rational(std::move(w));
}

namespace {

Complex eval_form(const BinaryForm& f, const Complex& s, const Complex& t) {
  // sum a_p s^(n-p) t^p via Horner in both variables
  const int n = f.degree();
  Complex acc;
  std::vector<Complex> sp(n + 1), tp(n + 1);
  sp[0] = Complex(Real(1));
  tp[0] = Complex(Real(1));
  for (int i = 1; i <= n; ++i) {
    sp[i] = sp[i - 1] * s;
    tp[i] = tp[i - 1] * t;
  }
  for (int p = 0; p <= n; ++p)
    if (f.coeff(p) != 0) acc += sp[n - p] * tp[p] * to_real(f.coeff(p));
  return acc;
}

}  // namespace

std::vector<Complex> normalize_unit(const std::vector<Complex>& z) {
  Real nn = 0;
  size_t big = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    nn += z[i].norm2();
    if (z[i].norm2() > z[big].norm2()) big = i;
  }
  if (nn == 0) throw MathError("ZeroPoint", "all coordinates vanish");
  // fix the phase so the largest coordinate is real positive
  Complex ph = z[big] * (Real(1) / z[big].abs());
  Real inv = 1 / boost::multiprecision::sqrt(nn);
  std::vector<Complex> out;
  for (const auto& x : z) out.push_back((x / ph) * inv);
  return out;
}

std::vector<Complex> normalize_first(const std::vector<Complex>& z, const Real& tol) {
  std::vector<Complex> u = normalize_unit(z);
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i].abs() > tol) {
      Complex d = u[i];
      std::vector<Complex> out;
      for (size_t j = 0; j < u.size(); ++j) out.push_back(j < i ? Complex() : u[j] / d);
      return out;
    }
  throw MathError("ZeroPoint", "all coordinates vanish");
}

std::vector<Complex> evaluate(const CurveParam& c, const Complex& s, const Complex& t) {
  std::vector<Complex> w;
  for (int u = 0; u < 3; ++u) w.push_back(eval_form(c.f(u), s, t));
  Real nn = w[0].norm2() + w[1].norm2() + w[2].norm2();
  if (nn == 0) throw MathError("IndeterminatePoint", "all components vanish");
  return normalize_unit(w);
}

std::vector<Complex> evaluate(const CurveParam& c, const P1Point& p) {
  PrecisionGuard g(std::max(p.u.precision_bits, kDefaultPrecisionBits));
  return evaluate(c, p.s(), p.t());
}

PointPk apply_projection(const CurveParam& c, const std::vector<Rat>& z) {
  if (static_cast<int>(z.size()) != c.n() + 1) throw MathError("DimensionMismatch", "point of P^n expected");
  std::vector<Rat> w(3);
  for (int u = 0; u < 3; ++u)
    for (int p = 0; p <= c.n(); ++p) w[u] += z[p] * c.a(u, p);
  if (w[0] == 0 && w[1] == 0 && w[2] == 0) throw MathError("PointInCenter", "point lies in the center of projection");
  return PointPk::from_rational(std::move(w));
}

std::vector<Complex> apply_projection(const CurveParam& c, const std::vector<Complex>& z) {
  std::vector<Complex> w(3);
  for (int u = 0; u < 3; ++u)
    for (int p = 0; p <= c.n(); ++p)
      if (c.a(u, p) != 0) w[u] += z[p] * to_real(c.a(u, p));
  if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero())
    throw MathError("PointInCenter", "point lies in the center of projection");
  return normalize_unit(w);
}

}  // namespace ratcurve
