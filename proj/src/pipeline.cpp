#include "ratcurve/pipeline.hpp"

#include <algorithm>

#include "ratcurve/numeric.hpp"
#include "ratcurve/strata.hpp"
#include "ratcurve/zerodim.hpp"

namespace ratcurve {

std::string to_string(RealClass c) {
  switch (c) {
    case RealClass::RealOnCurve:
      return "real_on_curve";
    case RealClass::Acnode:
      return "acnode";
    case RealClass::Hidden:
      return "hidden";
    case RealClass::NonReal:
      return "nonreal";
  }
  return "nonreal";
}

MultiPoly conic_poly(const RingPtr& r) {
  MultiPoly x0 = MultiPoly::variable(r, 0), x1 = MultiPoly::variable(r, 1), x2 = MultiPoly::variable(r, 2);
  return x1 * x1 - x0 * x2 * Rat(4);
}

bool clebsch_check(const std::map<int, int>& N_k, int n) {
  Int lhs = 0;
  for (const auto& [k, c] : N_k) lhs += Int(c) * binomial(k, 2);
  return lhs == binomial(n - 1, 2);
}

BinaryForm preimage_form(const SecantFibers& fib) {
  const QuotientAlgebra& A = fib.algebra();
  const int N = A.dim(), k = fib.k();
  // A[s]/(G(s,1)) is free over A with basis 1, s, ..., s^(k-1)
  QMatrix M(N * k, N * k);
  for (int j = 0; j + 1 < k; ++j)
    for (int i = 0; i < N; ++i) M((j + 1) * N + i, j * N + i) = 1;
  for (int i = 1; i <= k; ++i) {
    const QMatrix& xi = fib.x_matrix(i);
    const int row = (k - i) * N, col = (k - 1) * N;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) M(row + a, col + b) = -xi(a, b);
  }
  QVec v(N * k);
  QVec one = A.one();
  for (int i = 0; i < N; ++i) v[i] = one[i];
  UPoly m = krylov_minpoly(M, v);
  BinaryForm Fs = BinaryForm::homogenize_t(m, m.degree());
  return Fs.shear(-fib.shear()).normalized();
}

std::vector<int> colon_chain_degrees(const Ideal& I, const MultiPoly& g, int steps) {
  std::vector<int> out;
  if (is_irrelevant(I)) return std::vector<int>(steps, 0);
  Chart ch = Chart::choose(I);
  QuotientAlgebra A(ch.to_affine(I));
  QMatrix G = A.mult_matrix(ch.to_affine(g.in_ring(I.ring())));
  QMatrix P = QMatrix::identity(A.dim());
  for (int m = 0; m < steps; ++m) {
    // length of I : g^m is the rank of multiplication by g^m
    out.push_back(rank(P));
    P = G * P;
  }
  return out;
}

Pipeline::Pipeline(CurveParam c, PipelineOptions opt) : c_(std::move(c)), opt_(opt) {}

const Ideal& Pipeline::X(int k) {
  auto it = X_.find(k);
  if (it == X_.end()) it = X_.emplace(k, ideal_Xk(c_, k)).first;
  return it->second;
}

const Ideal& Pipeline::Z(int k) {
  auto it = Z_.find(k);
  if (it == Z_.end()) {
    const Ideal& x = X(k);
    it = Z_.emplace(k, is_irrelevant(x) ? x : radical_zero_dim(x)).first;
  }
  return it->second;
}

int Pipeline::top() {
  if (!top_) {
    for (int k = n() - 1; k >= 2; --k)
      if (!is_irrelevant(X(k))) {
        top_ = k;
        break;
      }
    if (!top_) throw MathError("Inconsistent", "X_2 is empty, which a proper curve of degree >= 3 cannot have");
  }
  return *top_;
}

namespace {

std::vector<QVec> full_space(int n) {
  std::vector<QVec> out;
  for (int i = 0; i < n; ++i) {
    QVec e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const CountResult& Pipeline::counts() {
  if (counts_) return *counts_;
  CountResult r;
  r.top = top();
  for (int k = 2; k <= r.top; ++k) {
    const Ideal& z = Z(k);
    if (is_irrelevant(z)) continue;
    Chart ch = Chart::choose(z);
    QuotientAlgebra A(ch.to_affine(z));
    const int N = A.dim();
    std::map<Partition, std::vector<QVec>> U;
    for (const auto& lam : partitions_of(k))
      U[lam] = ideal_span(A, ch.to_affine(rlambda_ideal(k, lam).in_ring(z.ring())).gens());
    for (const auto& lam : partitions_of(k)) {
      // points in R_lambda outside every smaller stratum (the covers suffice)
      std::vector<QVec> inter = full_space(N);
      for (const auto& c : covers_below(lam)) inter = intersect_spans(inter, U[c], N);
      const int outside = static_cast<int>(inter.size());
      const int both = static_cast<int>(intersect_spans(inter, U[lam], N).size());
      if (outside - both > 0) r.strata[k][lam] = outside - both;
    }
  }
  // peel off the points induced by higher multiplicities, top down
  for (int j = r.top; j >= 2; --j) {
    int total = 0;
    for (const auto& sigma : partitions_of(j)) {
      Int v = 0;
      if (r.strata.count(j) && r.strata[j].count(sigma)) v = r.strata[j][sigma];
      for (const auto& [m, row] : r.branches)
        if (m > j)
          for (const auto& [mu, cnt] : row) v -= Int(cnt) * sub_shape_count(mu, sigma);
      if (v < 0)
        throw MathError("NegativeCount", "N'_{" + std::to_string(j) + "," + sigma.to_string() + "} = " + v.get_str());
      if (v > 0) {
        r.branches[j][sigma] = static_cast<int>(v.get_si());
        total += static_cast<int>(v.get_si());
      }
    }
    if (total > 0) r.N_k[j] = total;
    r.N += total;
  }
  counts_ = std::move(r);
  return *counts_;
}

const CuspidalResult& Pipeline::cuspidal() {
  if (cusp_) return *cusp_;
  CuspidalResult r;
  const Ideal& J = Z(2);
  MultiPoly g = conic_poly(J.ring());
  Ideal Jg = J + g;
  r.cuspidal = J.contains(g);
  const bool off_conic = is_irrelevant(Jg);
  r.ordinary_only = X(2) == J && off_conic;
  r.cusp_count = off_conic ? 0 : projective_degree(radical_zero_dim(Jg));
  r.support_size = projective_degree(J);
  cusp_ = r;
  return *cusp_;
}

const IdealsResult& Pipeline::ideals() {
  if (ideals_) return *ideals_;
  IdealsResult r;
  RingPtr wr = Ring::indexed("w", 3);
  const int t = top();
  for (int k = t; k >= 2; --k) {
    const Ideal& z = Z(k);
    if (is_irrelevant(z)) {
      r.J_geq[k] = Ideal::unit(wr);
      continue;
    }
    SecantFibers fib(n(), z, k);
    const QuotientAlgebra& A = fib.algebra();
    CurveParam cs = c_.sheared(fib.shear());
    // a point y0 of each fiber: its image does not depend on the choice as
    // long as it avoids the center, i.e. the W_u generate the unit ideal
    std::vector<std::vector<QVec>> W;
    for (int c = 1;; ++c) {
      if (c > 64) throw MathError("Internal", "no fiber point avoids the center of projection");
      std::vector<Rat> y0(k);
      Rat p = 1;
      for (int q = 0; q < k; ++q) {
        y0[q] = p;
        p *= c;
      }
      W.assign(3, std::vector<QVec>(1, QVec(A.dim())));
      for (int u = 0; u < 3; ++u)
        for (int p2 = 0; p2 <= n(); ++p2) {
          if (cs.a(u, p2) == 0) continue;
          for (int q = 0; q < k; ++q) {
            const Rat f = cs.a(u, p2) * y0[q];
            if (f == 0) continue;
            const QVec& l = fib.fiber()[p2][q];
            for (int b = 0; b < A.dim(); ++b) W[u][0][b] += f * l[b];
          }
        }
      std::vector<MultiPoly> ws;
      for (int u = 0; u < 3; ++u) ws.push_back(A.element(W[u][0]));
      if (static_cast<int>(ideal_span(A, ws).size()) == A.dim()) break;
    }
    LinearFormEvaluator ev(A, W, wr);
    r.J_geq[k] = kernel_ideal(ev, KernelStop::Points);
  }
  r.J_N = r.J_geq.at(2);
  for (int k = 2; k <= t; ++k) {
    r.J[k] = k == t ? r.J_geq[k] : colon(r.J_geq[k], r.J_geq[k + 1]);
    const int d = is_irrelevant(r.J[k]) ? 0 : projective_degree(r.J[k]);
    if (d > 0) r.N_k[k] = d;
  }
  r.N = is_irrelevant(r.J_N) ? 0 : projective_degree(r.J_N);
  ideals_ = std::move(r);
  return *ideals_;
}

namespace {

// f with every root of g removed
BinaryForm strip_roots(BinaryForm f, const BinaryForm& g) {
  for (;;) {
    BinaryForm h = binary_gcd(f, g);
    if (h.degree() == 0) return f.normalized();
    f = f.exact_div(h);
  }
}

}  // namespace

const PreimageResult& Pipeline::preimages() {
  if (pre_) return *pre_;
  PreimageResult r;
  const int t = top();
  for (int k = t; k >= 2; --k) {
    const Ideal& z = Z(k);
    if (is_irrelevant(z)) continue;
    SecantFibers fib(n(), z, k);
    r.F[k] = preimage_form(fib);
  }
  for (int k = t; k >= 2; --k) {
    if (!r.F.count(k)) continue;
    if (!r.F.count(k + 1)) {
      r.fresh[k] = r.F[k];
      continue;
    }
    if (!r.F[k + 1].divides(r.F[k]))
      r.divisibility_failures.push_back("F_" + std::to_string(k + 1) + " does not divide F_" + std::to_string(k));
    r.fresh[k] = strip_roots(r.F[k], r.F[k + 1]);
  }
  pre_ = std::move(r);
  return *pre_;
}

namespace {

bool point_less(const SingularPoint& a, const SingularPoint& b) {
  if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
  for (int i = 0; i < a.coords.size(); ++i) {
    const Complex &x = a.coords.z[i], &y = b.coords.z[i];
    if (x.re != y.re) return x.re < y.re;
    if (x.im != y.im) return x.im < y.im;
  }
  return false;
}

}  // namespace

const std::vector<SingularPoint>& Pipeline::points() {
  if (points_) return *points_;
  std::vector<SingularPoint> out;
  const PreimageResult& pre = preimages();
  const IdealsResult& ids = ideals();
  for (int k = top(); k >= 2; --k) {
    if (!pre.fresh.count(k) || pre.fresh.at(k).degree() == 0) continue;
    DivisorP1 d = complex_roots(pre.fresh.at(k), opt_.precision_bits);
    auto groups = group_preimages(c_, d, opt_.cluster_tol, opt_.precision_bits);
    std::vector<PointPk> exact;
    if (ids.J.count(k) && !is_irrelevant(ids.J.at(k))) exact = solve_points(ids.J.at(k), opt_.precision_bits);
    for (auto& g : groups) {
      SingularPoint sp;
      sp.multiplicity = k;
      std::vector<int> mults;
      for (const auto& e : g.preimages) mults.push_back(e.multiplicity);
      int sum = 0;
      for (int m : mults) sum += m;
      if (sum != k)
        throw MathError("Inconsistent", "preimage multiplicities of " + g.image.to_string() + " sum to " +
                                            std::to_string(sum) + ", expected " + std::to_string(k));
      sp.branch_partition = Partition::make(mults, k);
      sp.coords = g.image;
      sp.preimages = g.preimages;
      if (!g.image.exact) {
        // prefer the algebraic description from Algorithm 2
        for (const auto& e : exact)
          if (projective_distance(e.z, g.image.z) < opt_.cluster_tol) {
            sp.coords = e;
            break;
          }
      }
      out.push_back(std::move(sp));
    }
  }
  std::stable_sort(out.begin(), out.end(), point_less);
  points_ = std::move(out);
  return *points_;
}

CountResult count_singularities(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  return p.counts();
}

StratumTable branch_structure(const CurveParam& c) { return count_singularities(c).branches; }

CuspidalResult cuspidal_test(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  return p.cuspidal();
}

IdealsResult singular_ideals(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  return p.ideals();
}

PreimageResult preimage_forms(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  return p.preimages();
}

std::vector<SingularPoint> classify_double_points(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  std::vector<SingularPoint> out;
  for (const auto& sp : p.classified())
    if (sp.multiplicity == 2) out.push_back(sp);
  return out;
}

}  // namespace ratcurve
