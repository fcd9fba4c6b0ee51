#include "ratcurve/resultant.hpp"

namespace ratcurve {

MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m, const RingPtr& ring) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return MultiPoly::constant(ring, 1);
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return MultiPoly(ring);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v.exact_divide(prev);
      }
      m[i][k] = MultiPoly(ring);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

MultiPoly sylvester_resultant(const std::vector<MultiPoly>& f_desc, const std::vector<MultiPoly>& g_desc,
                              const RingPtr& ring) {
  const int df = static_cast<int>(f_desc.size()) - 1, dg = static_cast<int>(g_desc.size()) - 1;
  if (df < 0 || dg < 0) throw MathError("ZeroInput", "resultant of an empty coefficient list");
  const int n = df + dg;
  if (n == 0) return MultiPoly::constant(ring, 1);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) m[r][r + j] = g_desc[j];
  for (int r = 0; r < dg; ++r)
    for (int j = 0; j <= df; ++j) m[df + r][r + j] = f_desc[j];
  return poly_determinant(std::move(m), ring);
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var) {
  int d = f.degree_in(var);
  std::vector<std::vector<MultiPoly::Term>> parts(std::max(d, 0) + 1);
  for (const auto& [m, c] : f.terms()) {
    Mono r = m;
    int e = r.e[var];
    r.deg = static_cast<uint16_t>(r.deg - e);
    r.e[var] = 0;
    parts[e].emplace_back(r, c);
  }
  std::vector<MultiPoly> out;
  for (auto& p : parts) out.push_back(MultiPoly::from_terms(f.ring(), std::move(p)));
  return out;
}

namespace {

using UP = std::vector<MultiPoly>;  // ascending powers, trimmed

int udeg(const UP& p) { return static_cast<int>(p.size()) - 1; }

void utrim(UP& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UP uscale(const UP& p, const MultiPoly& c) {
  UP r;
  for (const auto& x : p) r.push_back(x * c);
  utrim(r);
  return r;
}

UP udiv_scalar(const UP& p, const MultiPoly& c) {
  UP r;
  for (const auto& x : p) r.push_back(x.exact_divide(c));
  return r;
}

// lc(B)^(degA-degB+1) * A mod B
UP prem(UP a, const UP& b, const RingPtr& ring) {
  const int db = udeg(b);
  const MultiPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (udeg(a) >= db && !a.empty()) {
    MultiPoly la = a.back();
    int shift = udeg(a) - db;
    UP na = uscale(a, lb);
    for (int j = 0; j <= db; ++j) na[shift + j] -= la * b[j];
    na.pop_back();
    utrim(na);
    a = std::move(na);
    --e;
  }
  if (e > 0) a = uscale(a, lb.pow(e));
  (void)ring;
  return a;
}

}  // namespace

MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw MathError("ZeroInput", "resultant with a zero polynomial");
  const RingPtr& ring = f.ring();
  UP a = coefficients_in(g, var), b = coefficients_in(f, var);  // convention: Res(g, f)
  utrim(a);
  utrim(b);
  int s = 1;
  if (udeg(a) < udeg(b)) {
    std::swap(a, b);
    if ((udeg(a) % 2) && (udeg(b) % 2)) s = -s;
  }
  if (udeg(b) == 0) return b[0].pow(udeg(a)) * Rat(s);
  MultiPoly gg = MultiPoly::constant(ring, 1), h = MultiPoly::constant(ring, 1);
  while (true) {
    int delta = udeg(a) - udeg(b);
    if ((udeg(a) % 2) && (udeg(b) % 2)) s = -s;
    UP r = prem(a, b, ring);
    a = b;
    if (r.empty()) return MultiPoly(ring);
    b = udiv_scalar(r, gg * h.pow(delta));
    gg = a.back();
    // h = g^delta / h^(delta-1)
    if (delta > 0) h = gg.pow(delta).exact_divide(h.pow(delta - 1));
    if (udeg(b) == 0) {
      int da = udeg(a);
      MultiPoly t = b[0].pow(da).exact_divide(h.pow(da - 1));
      return t * Rat(s);
    }
  }
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw MathError("ZeroInput", "resultant with a zero polynomial");
  int df = f.degree_in(var), dg = g.degree_in(var);
  if (std::max(df, dg) > 8) return resultant_subresultant(f, g, var);
  auto fc = coefficients_in(f, var), gc = coefficients_in(g, var);
  UP fd(fc.rbegin(), fc.rend()), gd(gc.rbegin(), gc.rend());
  return sylvester_resultant(fd, gd, f.ring());
}

}  // namespace ratcurve
