#include "ratcurve/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ratcurve {

namespace {

int bitlen(const Int& z) { return static_cast<int>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

struct Attempt {
  std::vector<Complex> z;
  std::vector<Real> r;
  bool ok = false;
};

// sum |c_i| x^i
Real eval_abs(const std::vector<Real>& c, const Real& x) {
  Real r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + boost::multiprecision::abs(*it);
  return r;
}

Attempt aberth(const std::vector<Real>& c, int bits, int seed_shift) {
  const int d = static_cast<int>(c.size()) - 1;
  Attempt at;
  // seeds on a circle whose radius is the geometric mean of the root moduli
  Real rho = 1;
  if (c[0] != 0) rho = boost::multiprecision::pow(boost::multiprecision::abs(c[0] / c[d]), Real(1) / d);
  else {
    Real s = 0;
    for (int i = 1; i < d; ++i) s = std::max<Real>(s, boost::multiprecision::abs(c[i] / c[d]));
    rho = s > 0 ? s : Real(1);
  }
  const Real pi = boost::multiprecision::acos(Real(-1));
  Real offset = Real(0.4 + 0.37 * seed_shift) / d;
  for (int k = 0; k < d; ++k) {
    Real ang = 2 * pi * k / d + offset;
    Real scale = rho * (1 + Real(k % 3) / 97);
    at.z.emplace_back(scale * boost::multiprecision::cos(ang), scale * boost::multiprecision::sin(ang));
  }
  std::vector<Real> dc(d);
  for (int i = 1; i <= d; ++i) dc[i - 1] = c[i] * i;
  const Real tol = two_pow(-bits + 16);
  const Real noise_scale = two_pow(-bits + 8) * (d + 1);
  const int max_iter = 400 + 20 * d;
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      Complex p = eval_poly(c, at.z[i]);
      if (p.is_zero()) continue;
      // |p(z)| at the rounding level of its evaluation: no further progress possible
      bool noise = p.abs() <= noise_scale * eval_abs(c, at.z[i].abs());
      Complex dp = eval_poly(dc, at.z[i]);
      Complex w = p / dp;
      Complex sum;
      for (int j = 0; j < d; ++j)
        if (j != i) sum += Complex(Real(1)) / (at.z[i] - at.z[j]);
      Complex denom = Complex(Real(1)) - w * sum;
      Complex step = denom.is_zero() ? w : w / denom;
      at.z[i] -= step;
      if (!noise && step.abs() > tol * (1 + at.z[i].abs())) converged = false;
    }
  }
  if (!converged) return at;
  // inclusion radii r_i = d |p(z_i)| / |lc prod (z_i - z_j)|, inflated for rounding
  for (int i = 0; i < d; ++i) {
    Complex p = eval_poly(c, at.z[i]);
    Complex prod(c[d]);
    for (int j = 0; j < d; ++j)
      if (j != i) prod *= (at.z[i] - at.z[j]);
    Real pa = prod.abs();
    if (pa == 0) return at;
    Real r = Real(d) * p.abs() / pa;
    at.r.push_back(2 * r + two_pow(-bits + 40) * (1 + at.z[i].abs()));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if ((at.z[i] - at.z[j]).abs() <= at.r[i] + at.r[j]) return at;
  at.ok = true;
  return at;
}

}  // namespace

std::vector<CRoot> isolate_roots(const UPoly& f0, int precision_bits) {
  if (f0.degree() < 1) throw MathError("ZeroInput", "root isolation needs a nonconstant polynomial");
  UPoly f = f0.primitive();
  const int d = f.degree();
  const int nreal = count_real_roots(f);
  Int lead = f.lc().get_num();
  int bits = std::max(precision_bits, 2 * bitlen(lead) + 64);
  const int max_bits = std::max(kMaxPrecisionBits, 2 * bitlen(lead) + 128);
  for (int attempt = 0; bits <= max_bits; bits *= 2, ++attempt) {
    PrecisionGuard guard(bits);
    std::vector<Real> c;
    for (const auto& q : f.coeffs()) c.push_back(to_real(q));
    std::vector<CRoot> out;
    if (d == 1) {
      CRoot r;
      r.q = -f.coeff(0) / f.coeff(1);
      r.z = Complex::from_rat(r.q);
      r.radius = 0;
      r.real = r.exact = true;
      r.precision_bits = bits;
      return {r};
    }
    Attempt at = aberth(c, bits, attempt);
    if (!at.ok) continue;
    int touching = 0;
    for (int i = 0; i < d; ++i)
      if (boost::multiprecision::abs(at.z[i].im) <= at.r[i]) ++touching;
    if (touching != nreal) continue;
    for (int i = 0; i < d; ++i) {
      CRoot r;
      r.z = at.z[i];
      r.radius = at.r[i];
      r.precision_bits = bits;
      r.real = boost::multiprecision::abs(at.z[i].im) <= at.r[i];
      if (r.real) {
        r.z.im = 0;
        // rational roots a/b have b | lead; Legendre makes them convergents at this precision
        Rat x = to_rat(r.z.re);
        for (const Rat& cand : convergents(x, abs(lead))) {
          if (boost::multiprecision::abs(to_real(cand) - r.z.re) > r.radius) continue;
          if (f.eval(cand) == 0) {
            r.exact = true;
            r.q = cand;
            r.z = Complex::from_rat(cand);
            r.radius = 0;
            break;
          }
        }
      }
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const CRoot& a, const CRoot& b) {
      if (a.z.re != b.z.re) return a.z.re < b.z.re;
      return a.z.im < b.z.im;
    });
    return out;
  }
  throw MathError("PrecisionExhausted", "root enclosures could not be separated");
}

Complex P1Point::s() const { return infinity ? Complex(Real(0)) : Complex(Real(1)); }
Complex P1Point::t() const { return infinity ? Complex(Real(1)) : u.z; }

std::string P1Point::to_string(int digits) const {
  if (infinity) return "(0:1)";
  if (u.exact) return "(1:" + ratcurve::to_string(u.q) + ")";
  return "(1:" + u.z.to_string(digits) + ")";
}

int DivisorP1::total_multiplicity() const {
  int s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

DivisorP1 complex_roots(const BinaryForm& f, int precision_bits) {
  if (f.is_zero()) throw MathError("ZeroForm", "zero divisor of the zero form");
  DivisorP1 div;
  div.degree = f.degree();
  int sv = f.s_valuation();
  if (sv > 0) {
    DivisorEntry e;
    e.point.infinity = true;
    e.point.factor = UPoly();
    e.multiplicity = sv;
    div.entries.push_back(std::move(e));
  }
  UPoly g = f.dehomogenize_s();
  if (g.degree() >= 1) {
    std::vector<DivisorEntry> rest;
    for (const auto& [h, m] : squarefree_factors(g)) {
      for (auto& r : isolate_roots(h, precision_bits)) {
        DivisorEntry e;
        e.point.u = std::move(r);
        e.point.factor = h;
        e.multiplicity = m;
        rest.push_back(std::move(e));
      }
    }
    std::sort(rest.begin(), rest.end(), [](const DivisorEntry& a, const DivisorEntry& b) {
      if (a.point.u.z.re != b.point.u.z.re) return a.point.u.z.re < b.point.u.z.re;
      return a.point.u.z.im < b.point.u.z.im;
    });
    for (auto& e : rest) div.entries.push_back(std::move(e));
  }
  return div;
}

}  // namespace ratcurve
