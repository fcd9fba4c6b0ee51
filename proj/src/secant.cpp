#include "ratcurve/secant.hpp"

#include <map>

#include "ratcurve/zerodim.hpp"

namespace ratcurve {

SecantMatrix build_Mk(const CurveParam& c, int k) {
  const int n = c.n();
  if (k < 2 || k > n - 1) throw MathError("KOutOfRange", "k must satisfy 2 <= k <= n-1");
  SecantMatrix M;
  M.n = n;
  M.k = k;
  M.ring = Ring::indexed("x", k + 1);
  for (int j = 0; j <= n - k; ++j) {
    std::vector<MultiPoly> row(n + 1, MultiPoly(M.ring));
    for (int i = 0; i <= k; ++i) row[i + j] = MultiPoly::variable(M.ring, i);
    M.m.push_back(std::move(row));
  }
  for (int u = 0; u < 3; ++u) {
    std::vector<MultiPoly> row;
    for (int p = 0; p <= n; ++p) row.push_back(MultiPoly::constant(M.ring, c.a(u, p)));
    M.m.push_back(std::move(row));
  }
  return M;
}

Int minor_count(int n, int k) { return binomial(n - k + 4, n - k + 3) * binomial(n + 1, n - k + 3); }

namespace {

// Determinants of all r x r minors with rows `rows` (in this order) by
// Laplace expansion over column subsets, one row at a time.
void minors_of_rows(const SecantMatrix& M, const std::vector<int>& rows, std::vector<MultiPoly>& out) {
  const int ncols = M.cols();
  std::map<unsigned, MultiPoly> cur{{0u, MultiPoly::constant(M.ring, 1)}};
  for (size_t step = 0; step < rows.size(); ++step) {
    std::map<unsigned, MultiPoly> next;
    const auto& row = M.m[rows[step]];
    for (const auto& [mask, det] : cur) {
      if (det.is_zero()) continue;
      for (int col = 0; col < ncols; ++col) {
        if (mask & (1u << col) || row[col].is_zero()) continue;
        // sign: number of chosen columns to the right of col
        int right = __builtin_popcount(mask >> col);
        MultiPoly term = row[col] * det;
        auto& slot = next.try_emplace(mask | (1u << col), MultiPoly(M.ring)).first->second;
        if (right % 2) slot -= term;
        else slot += term;
      }
    }
    cur = std::move(next);
  }
  // every column subset of the right size, vanishing minors included
  const int r = static_cast<int>(rows.size());
  for (unsigned mask = 0; mask < (1u << ncols); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    auto it = cur.find(mask);
    out.push_back(it == cur.end() ? MultiPoly(M.ring) : std::move(it->second));
  }
}

}  // namespace

std::vector<MultiPoly> minors_Xk(const CurveParam& c, int k) {
  SecantMatrix M = build_Mk(c, k);
  const int R = M.rows();
  const int r = c.n() - k + 3;
  std::vector<MultiPoly> gens;
  // r = R - 1: drop one row at a time; constant rows first keeps entries small
  for (int drop = 0; drop < R; ++drop) {
    std::vector<int> rows;
    for (int i = R - 3; i < R; ++i)
      if (i != drop) rows.push_back(i);
    for (int i = 0; i < R - 3; ++i)
      if (i != drop) rows.push_back(i);
    if (static_cast<int>(rows.size()) != r) throw MathError("Internal", "minor size");
    minors_of_rows(M, rows, gens);
  }
  return gens;
}

Ideal ideal_Xk(const CurveParam& c, int k) {
  return Ideal(Ring::indexed("x", k + 1), interreduce_linear(minors_Xk(c, k)));
}

Ideal rnc_ideal(int n) {
  if (n < 2) throw MathError("KOutOfRange", "rational normal curve needs n >= 2");
  RingPtr r = Ring::indexed("z", n + 1);
  std::vector<MultiPoly> g;
  auto z = [&](int i) { return MultiPoly::variable(r, i); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.push_back(z(i) * z(j + 1) - z(i + 1) * z(j));
  return Ideal(r, std::move(g));
}

Ideal shear_points(const Ideal& Z, const Rat& c) {
  const RingPtr& r = Z.ring();
  const int k = r->size() - 1;
  // x = S_{-c} x', with x_i = sum_{j>=i} C(j,i) (-c)^(j-i) x'_j
  std::vector<MultiPoly> img;
  for (int i = 0; i <= k; ++i) {
    MultiPoly xi(r);
    Rat pw = 1;
    for (int j = i; j <= k; ++j) {
      xi += MultiPoly::variable(r, j) * (Rat(binomial(j, i)) * pw);
      pw *= -c;
    }
    img.push_back(std::move(xi));
  }
  std::vector<MultiPoly> g;
  for (const auto& p : Z.gens()) g.push_back(p.substitute(img));
  return Ideal(r, std::move(g));
}

Rat choose_shear(const Ideal& Z) {
  const RingPtr& r = Z.ring();
  for (int a = 0; a < 200; ++a) {
    Rat c = (a % 2 ? 1 : -1) * ((a + 1) / 2);
    Ideal Zc = shear_points(Z, c);
    std::vector<MultiPoly> g = Zc.gens();
    g.push_back(MultiPoly::variable(r, 0));
    if (is_irrelevant(Ideal(r, std::move(g)))) return c;
  }
  throw MathError("NoShear", "no shear moves the points off x0 = 0");
}

SecantFibers::SecantFibers(int n, const Ideal& Z, int k) : n_(n), k_(k) {
  if (Z.ring()->size() != k + 1) throw MathError("DimensionMismatch", "Z must live in K[x0..xk]");
  if (!Z.is_homogeneous()) throw MathError("NotHomogeneous", "Z must be homogeneous");
  if (Z.is_unit() || is_irrelevant(Z)) throw MathError("EmptyScheme", "Z has no points");
  if (hilbert(Z).krull_dim != 1) throw MathError("NotZeroDimensional", "Z must be zero-dimensional");
  c_ = choose_shear(Z);
  sheared_ = shear_points(Z, c_);
  Chart ch = Chart::variable(sheared_.ring(), 0);
  A_ = std::make_unique<QuotientAlgebra>(ch.to_affine(sheared_));
  const QuotientAlgebra& A = *A_;
  for (const auto& f : ch.coordinate_functions()) x_.push_back(A.coords(f));
  for (int i = 0; i <= k; ++i) xmat_.push_back(A.mult_matrix(A.element(x_[i])));
  // z'_p for p > n-k are free; the rest solve sum_i x'_i z'_{i+j} = 0 with x'_0 = 1
  L_.assign(n + 1, std::vector<QVec>(k, QVec(A.dim())));
  for (int q = 0; q < k; ++q) L_[n - k + 1 + q][q] = A.one();
  for (int j = n - k; j >= 0; --j)
    for (int i = 1; i <= k; ++i)
      for (int q = 0; q < k; ++q) {
        QVec t = xmat_[i] * L_[i + j][q];
        for (int b = 0; b < A.dim(); ++b) L_[j][q][b] -= t[b];
      }
}

Ideal contracted_lines_ideal(int n, const Ideal& Z, int k) {
  RingPtr zr = Ring::indexed("z", n + 1);
  if (Z.ring()->size() != k + 1) throw MathError("DimensionMismatch", "Z must live in K[x0..xk]");
  if (!Z.is_homogeneous()) throw MathError("NotHomogeneous", "Z must be homogeneous");
  if (Z.is_unit() || is_irrelevant(Z)) return Ideal::unit(zr);
  SecantFibers fib(n, Z, k);
  LinearFormEvaluator ev(fib.algebra(), fib.fiber(), zr);
  Ideal Jc = kernel_ideal(ev, KernelStop::Persistence);
  const Rat c = fib.shear();
  if (c == 0) return Jc;
  // back to the original parameter: z'_p = sum_{q<=p} C(p,q) (-c)^(p-q) z_q
  std::vector<MultiPoly> img;
  for (int p = 0; p <= n; ++p) {
    MultiPoly zp(zr);
    Rat pw = 1;
    for (int q = p; q >= 0; --q) {
      zp += MultiPoly::variable(zr, q) * (Rat(binomial(p, q)) * pw);
      pw *= -c;
    }
    img.push_back(std::move(zp));
  }
  std::vector<MultiPoly> g;
  for (const auto& p : Jc.gens()) g.push_back(p.substitute(img).primitive());
  return Ideal(zr, interreduce_linear(g));
}

Ideal contracted_lines_ideal(const CurveParam& c, const Ideal& Z, int k) { return contracted_lines_ideal(c.n(), Z, k); }

}  // namespace ratcurve
