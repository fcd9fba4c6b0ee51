#include "ratcurve/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ratcurve/resultant.hpp"

namespace ratcurve {

namespace {

MultiPoly form_in(const BinaryForm& f, const RingPtr& st) {
  MultiPoly s = MultiPoly::variable(st, 0), t = MultiPoly::variable(st, 1);
  MultiPoly r(st);
  const int n = f.degree();
  for (int p = 0; p <= n; ++p)
    if (f.coeff(p) != 0) r += s.pow(n - p) * t.pow(p) * f.coeff(p);
  return r;
}

bool divisible_by_var(const MultiPoly& f, int v) {
  if (f.is_zero()) return false;
  for (const auto& [m, c] : f.terms())
    if (static_cast<int>(m.e.size()) <= v || m.e[v] == 0) return false;
  return true;
}

Complex eval_complex(const MultiPoly& f, const std::vector<Complex>& z) {
  Complex r;
  for (const auto& [m, c] : f.terms()) {
    Complex v = Complex::from_rat(c);
    for (size_t i = 0; i < m.e.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= z[i];
    r += v;
  }
  return r;
}

Real coeff_norm(const MultiPoly& f) {
  Real s = 0;
  for (const auto& [m, c] : f.terms()) s += abs(to_real(c));
  return s;
}

// All partial derivatives of order exactly j (as a multiset of variables).
std::vector<MultiPoly> partials(const MultiPoly& F, int j) {
  // nondecreasing variable sequences only; derivatives commute
  std::vector<std::pair<MultiPoly, int>> cur{{F, 0}};
  for (int step = 0; step < j; ++step) {
    std::vector<std::pair<MultiPoly, int>> next;
    for (const auto& [g, last] : cur)
      for (int v = last; v < F.nvars(); ++v) {
        MultiPoly d = g.derivative(v);
        if (!d.is_zero()) next.emplace_back(std::move(d), v);
      }
    cur = std::move(next);
  }
  std::vector<MultiPoly> out;
  for (auto& [g, v] : cur) out.push_back(std::move(g));
  return out;
}

// Values of monomials at an algebraic point, reduced mod theta_poly and memoized.
class AlgebraicEvaluator {
 public:
  explicit AlgebraicEvaluator(const PointPk& p) : theta_(p.theta_poly), coords_(p.coord_polys) {}

  UPoly eval(const MultiPoly& f) {
    UPoly r;
    for (const auto& [m, c] : f.terms()) r = r + monomial({m.e[0], m.e[1], m.e[2]}) * c;
    return r % theta_;
  }

 private:
  const UPoly& monomial(std::vector<int> e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    UPoly v;
    if (e.empty()) {
      v = UPoly::constant(Rat(1));
    } else {
      size_t i = e.size() - 1;
      std::vector<int> lower = e;
      --lower[i];
      v = (monomial(lower) * coords_[i]) % theta_;
    }
    return cache_.emplace(std::move(e), std::move(v)).first->second;
  }

  UPoly theta_;
  std::vector<UPoly> coords_;
  std::map<std::vector<int>, UPoly> cache_;
};

// Conjugate points share theta_poly and coord_polys, hence one evaluator.
std::string group_key(const PointPk& p) {
  std::string k = p.theta_poly.to_string("theta");
  for (const auto& c : p.coord_polys) k += ";" + c.to_string("theta");
  return k;
}

SingularVerdict verify_one(const MultiPoly& F, const PointPk& p, int k, double tol, AlgebraicEvaluator* alg) {
  SingularVerdict v;
  const int deg = F.total_degree();
  PrecisionGuard g(kDefaultPrecisionBits);
  const std::vector<Complex> z = normalize_unit(p.z);
  v.exact = p.exact || alg;
  double worst = 0;
  int order = 0;
  for (int j = 0; j <= deg; ++j) {
    bool all_zero = true;
    double res = 0;
    for (const auto& D : partials(F, j)) {
      bool zero;
      if (p.exact) {
        zero = D.evaluate(p.q) == 0;
      } else if (alg && alg->eval(D).is_zero()) {
        zero = true;
      } else {
        if (alg && j < k) v.exact = false;
        double r = to_double(eval_complex(D, z).abs() / coeff_norm(D));
        res = std::max(res, r);
        zero = r < tol;
      }
      if (!zero) all_zero = false;
    }
    if (!all_zero) break;
    order = j + 1;
    if (j < k) worst = std::max(worst, res);
  }
  v.order = std::min(order, deg);
  v.residual = worst;
  v.pass = order >= k;
  if (!v.pass)
    v.detail = "partials vanish only through order " + std::to_string(order - 1) + ", need order " + std::to_string(k - 1);
  return v;
}

}  // namespace

MultiPoly implicitize_oracle(const CurveParam& c) {
  const int n = c.n();
  RingPtr W = Ring::indexed("w", 3);
  std::vector<MultiPoly> w{MultiPoly::variable(W, 0), MultiPoly::variable(W, 1), MultiPoly::variable(W, 2)};
  // cross forms f0*w_u - f_u*w0 as binary forms with coefficients in K[w];
  // the homogeneous resultant covers both affine charts at once
  auto cross = [&](int u) {
    std::vector<MultiPoly> co;
    for (int p = 0; p <= n; ++p) co.push_back(w[u] * c.a(0, p) - w[0] * c.a(u, p));
    return co;
  };
  MultiPoly R = sylvester_resultant(cross(1), cross(2), W);
  if (R.is_zero()) throw MathError("DegreeMismatch", "cross-form resultant vanishes identically");
  while (divisible_by_var(R, 0)) R = R.exact_divide(w[0]);
  R = R.primitive();
  if (R.total_degree() != n)
    throw MathError("DegreeMismatch",
                    "implicit equation has degree " + std::to_string(R.total_degree()) + ", expected " + std::to_string(n));
  // fix the sign: positive leading coefficient in grevlex
  if (R.leading_term(MonomialOrder::grevlex()).second < 0) R = -R;
  return R;
}

bool vanishes_on_curve(const MultiPoly& F, const CurveParam& c) {
  RingPtr st = Ring::make({"s", "t"});
  return F.substitute({form_in(c.f(0), st), form_in(c.f(1), st), form_in(c.f(2), st)}).is_zero();
}

SingularVerdict verify_singular(const MultiPoly& F, const PointPk& p, int k, double tol) {
  if (p.exact || p.coord_polys.empty()) return verify_one(F, p, k, tol, nullptr);
  AlgebraicEvaluator alg(p);
  return verify_one(F, p, k, tol, &alg);
}

std::vector<SingularVerdict> verify_singular(const MultiPoly& F, const std::vector<PointPk>& pts,
                                             const std::vector<int>& claimed, double tol) {
  std::vector<SingularVerdict> out;
  std::map<std::string, AlgebraicEvaluator> groups;
  for (size_t i = 0; i < pts.size(); ++i) {
    const PointPk& p = pts[i];
    const int k = i < claimed.size() ? claimed[i] : 2;
    AlgebraicEvaluator* alg = nullptr;
    if (!p.exact && !p.coord_polys.empty()) alg = &groups.try_emplace(group_key(p), p).first->second;
    out.push_back(verify_one(F, p, k, tol, alg));
  }
  return out;
}

}  // namespace ratcurve
