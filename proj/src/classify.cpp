#include <algorithm>

#include "ratcurve/numeric.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/zerodim.hpp"

namespace ratcurve {

namespace {

bool rat_sqrt(const Rat& q, Rat& out) {
  if (q < 0) return false;
  Int a = q.get_num(), b = q.get_den();
  if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return false;
  Int ra, rb;
  mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
  mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
  out = Rat(ra, rb);
  out.canonicalize();
  return true;
}

Complex csqrt(const Complex& z) {
  Real r = z.abs();
  Real a = boost::multiprecision::sqrt((r + z.re) / 2);
  Real b = boost::multiprecision::sqrt((r - z.re) / 2);
  if (z.im < 0) b = -b;
  return Complex(a, b);
}

// One root of x0 s^2 + x1 s t + x2 t^2 for a point R of X_2.
P1Point root_of(const PointPk& R, int bits) {
  P1Point p;
  if (R.exact) {
    const Rat &x0 = R.q[0], &x1 = R.q[1], &x2 = R.q[2];
    if (x2 == 0) {
      p.infinity = true;
      return p;
    }
    Rat sq;
    if (rat_sqrt(x1 * x1 - 4 * x0 * x2, sq)) {
      p.u.exact = true;
      p.u.real = true;
      p.u.q = (-x1 + sq) / (2 * x2);
      p.u.z = Complex::from_rat(p.u.q);
      return p;
    }
  }
  PrecisionGuard g(bits);
  const Complex &x0 = R.z[0], &x1 = R.z[1], &x2 = R.z[2];
  const Real scale = x0.abs() + x1.abs() + x2.abs();
  if (x2.abs() < scale * two_pow(-bits / 2)) {
    p.infinity = true;
    return p;
  }
  Complex d = csqrt(x1 * x1 - x0 * x2 * Real(4));
  // the larger-magnitude numerator avoids cancellation; the other root is x0/(x2 u)
  Complex a = -x1 + d, b = -x1 - d;
  Complex num = a.abs() >= b.abs() ? a : b;
  if (num.abs() < scale * two_pow(-bits / 2)) {
    p.u.z = Complex();
  } else {
    p.u.z = num / (x2 * Real(2));
  }
  p.u.precision_bits = bits;
  return p;
}

bool on_conic(const PointPk& R) {
  if (R.exact) return R.q[1] * R.q[1] - 4 * R.q[0] * R.q[2] == 0;
  // algebraic: theta is a simple root of theta_poly; test the factor it belongs to
  const UPoly& T = R.theta_poly;
  UPoly h = (R.coord_polys[1] * R.coord_polys[1] - R.coord_polys[0] * R.coord_polys[2] * Rat(4)) % T;
  if (h.is_zero()) return true;
  UPoly g = gcd(h, T);
  if (g.degree() <= 0) return false;
  UPoly co = T.exact_div(g);
  auto ev = [&](const UPoly& u) {
    std::vector<Real> c;
    for (int i = 0; i <= u.degree(); ++i) c.push_back(to_real(u.coeff(i)));
    return eval_poly(c, R.theta.z).abs();
  };
  return ev(g) < ev(co);
}

bool same_point(const PointPk& a, const PointPk& b, double tol) {
  if (a.exact && b.exact) return a.q == b.q;
  return projective_distance(a.z, b.z) < Real(tol);
}

}  // namespace

const std::vector<X2Point>& Pipeline::x2_points() {
  if (x2_) return *x2_;
  std::vector<X2Point> out;
  for (const auto& cls : length_classes(X(2), opt_.precision_bits))
    for (const auto& R : cls.points) {
      X2Point xp;
      xp.point = R;
      xp.length = cls.length;
      xp.on_conic = on_conic(R);
      xp.image = image_point(c_, root_of(R, opt_.precision_bits));
      out.push_back(std::move(xp));
    }
  x2_ = std::move(out);
  return *x2_;
}

const Algorithm4Result& Pipeline::algorithm4() {
  if (alg4_) return *alg4_;
  Algorithm4Result r;
  if (top() > 2) {
    r.skipped_reason = "curve has points of multiplicity >= 3";
    alg4_ = std::move(r);
    return *alg4_;
  }
  r.ran = true;
  // non-reduced X_2: preimage divisor with the multiplicities of the A_s points
  SecantFibers fib(n(), X(2), 2);
  r.F = preimage_form(fib);
  r.degree_ok = Int(r.F.degree()) == 2 * binomial(n() - 1, 2);
  // S' = image of the preimage scheme, as the kernel of K[w] -> K[s]/(F'(s,1))
  const Rat c = fib.shear();
  BinaryForm Fs = r.F.shear(c);
  CurveParam cs = c_.sheared(c);
  RingPtr sr = Ring::make({"s"});
  UPoly fu = Fs.dehomogenize_t();
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= fu.degree(); ++i)
    if (fu.coeff(i) != 0) terms.emplace_back(Mono::var(0, i), fu.coeff(i));
  QuotientAlgebra A(Ideal(sr, {MultiPoly::from_terms(sr, terms)}));
  std::vector<std::vector<QVec>> W;
  for (int u = 0; u < 3; ++u) {
    UPoly g = cs.f(u).dehomogenize_t();
    std::vector<MultiPoly::Term> gt;
    for (int i = 0; i <= g.degree(); ++i)
      if (g.coeff(i) != 0) gt.emplace_back(Mono::var(0, i), g.coeff(i));
    W.push_back({A.coords(MultiPoly::from_terms(sr, gt))});
  }
  LinearFormEvaluator ev(A, W, Ring::indexed("w", 3));
  r.S = kernel_ideal(ev, KernelStop::Points);
  alg4_ = std::move(r);
  return *alg4_;
}

const std::vector<SingularPoint>& Pipeline::classified() {
  if (classified_) return *classified_;
  std::vector<SingularPoint> pts = points();
  const auto& x2 = x2_points();
  const Algorithm4Result& a4 = algorithm4();
  std::vector<PreimageGroup> fgroups;
  std::vector<LengthClass> scls;
  std::vector<bool> scurv;
  if (a4.ran) {
    fgroups = group_preimages(c_, complex_roots(a4.F, opt_.precision_bits), opt_.cluster_tol, opt_.precision_bits);
    scls = length_classes(a4.S, opt_.precision_bits);
    for (const auto& cl : scls) {
      Ideal W = cl.support;
      scurv.push_back(cl.length <= 1 ||
                      projective_degree(a4.S + W * W) == 2 * static_cast<int>(cl.points.size()));
    }
  }
  int tested = 0, passed = 0;
  for (auto& sp : pts) {
    std::vector<const X2Point*> over;
    for (const auto& xp : x2)
      if (same_point(xp.image, sp.coords, opt_.cluster_tol)) over.push_back(&xp);
    if (!over.empty()) {
      int d = 0;
      for (const auto* xp : over) d += xp->length;
      sp.delta = d;
    }
    sp.delta_heuristic = sp.multiplicity >= 3;
    if (sp.multiplicity != 2) continue;
    if (over.size() != 1) {
      sp.a_inconclusive = true;
      sp.a_verification = "inconclusive: " + std::to_string(over.size()) + " points of X_2 over this point";
      continue;
    }
    const int m = over[0]->length;
    const bool conic = over[0]->on_conic;
    sp.a_index = conic ? 2 * m : 2 * m - 1;
    if (!a4.ran) {
      sp.a_verification = "not applicable: " + a4.skipped_reason;
      continue;
    }
    ++tested;
    std::string why;
    // divisor shape of F at the point: 2m at one preimage, or m at two
    const PreimageGroup* fg = nullptr;
    for (const auto& g : fgroups)
      if (same_point(g.image, sp.coords, opt_.cluster_tol)) fg = &g;
    if (!fg) {
      why = "no preimage of F maps to the point";
    } else {
      std::vector<int> ms;
      for (const auto& e : fg->preimages) ms.push_back(e.multiplicity);
      std::sort(ms.begin(), ms.end());
      const std::vector<int> want = conic ? std::vector<int>{2 * m} : std::vector<int>{m, m};
      if (ms != want) why = "divisor of F has the wrong shape at the point";
    }
    if (why.empty()) {
      int found = -1;
      for (size_t i = 0; i < scls.size() && found < 0; ++i)
        for (const auto& q : scls[i].points)
          if (same_point(q, sp.coords, opt_.cluster_tol)) found = static_cast<int>(i);
      if (found < 0)
        why = "S' does not contain the point";
      else if (scls[found].length != m)
        why = "S' has length " + std::to_string(scls[found].length) + " instead of " + std::to_string(m);
      else if (!scurv[found])
        why = "S' is not curvilinear at the point";
    }
    if (why.empty()) {
      ++passed;
      sp.a_verification = "verified";
    } else {
      sp.a_inconclusive = true;
      sp.a_verification = "inconclusive: " + why;
    }
  }
  if (a4.ran) {
    alg4_->tested = tested;
    alg4_->passed = passed;
  }
  classified_ = std::move(pts);
  return *classified_;
}

std::vector<std::pair<PointPk, int>> delta_map(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  std::vector<std::pair<PointPk, int>> out;
  Int sum = 0;
  for (const auto& sp : p.classified()) {
    const int d = sp.delta.value_or(0);
    out.emplace_back(sp.coords, d);
    sum += d;
  }
  if (sum != binomial(c.n() - 1, 2))
    throw MathError("GlobalDeltaMismatch",
                    "delta sum " + sum.get_str() + " differs from C(n-1,2) = " + binomial(c.n() - 1, 2).get_str());
  return out;
}

}  // namespace ratcurve
