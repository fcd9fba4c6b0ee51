#include "ratcurve/hilbert.hpp"

#include <algorithm>

namespace ratcurve {

namespace {

void minimize(std::vector<Mono>& g) {
  std::sort(g.begin(), g.end(), [](const Mono& a, const Mono& b) { return a.deg < b.deg; });
  std::vector<Mono> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g = std::move(out);
}

UPoly one_minus_t_pow(int d) {
  std::vector<Rat> c(d + 1);
  c[0] += 1;
  c[d] -= 1;
  return UPoly(std::move(c));
}

UPoly numerator_rec(std::vector<Mono> g) {
  minimize(g);
  if (g.empty()) return UPoly::constant(1);
  for (const auto& m : g)
    if (m.is_one()) return UPoly();
  // pairwise coprime generators: product formula
  uint32_t seen = 0;
  bool coprime = true;
  for (const auto& m : g) {
    uint32_t s = m.support_mask();
    if (s & seen) {
      coprime = false;
      break;
    }
    seen |= s;
  }
  if (coprime) {
    UPoly r = UPoly::constant(1);
    for (const auto& m : g) r = r * one_minus_t_pow(m.deg);
    return r;
  }
  // pivot on the variable occurring in most generators, at a median exponent
  int count[kMaxVars] = {0};
  for (const auto& m : g)
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[i]) ++count[i];
  int v = static_cast<int>(std::max_element(count, count + kMaxVars) - count);
  std::vector<int> ex;
  for (const auto& m : g)
    if (m.e[v] && m.e[v] != m.deg) ex.push_back(m.e[v]);  // skip pure powers so that p is not in J
  std::sort(ex.begin(), ex.end());
  int e = ex[ex.size() / 2];
  Mono p = Mono::var(v, e);
  // N(J) = N(J + p) + t^deg(p) N(J : p)
  std::vector<Mono> plus = g;
  plus.push_back(p);
  std::vector<Mono> colon;
  for (const auto& m : g) {
    Mono q = m;
    int sub = std::min<int>(q.e[v], e);
    q.e[v] = static_cast<uint16_t>(q.e[v] - sub);
    q.deg = static_cast<uint16_t>(q.deg - sub);
    colon.push_back(q);
  }
  return numerator_rec(std::move(plus)) + numerator_rec(std::move(colon)) * UPoly::monomial(1, e);
}

}  // namespace

UPoly hilbert_numerator(std::vector<Mono> gens, int nvars) {
  (void)nvars;
  return numerator_rec(std::move(gens));
}

HilbertData hilbert_data(const std::vector<Mono>& gens, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  UPoly q = hilbert_numerator(gens, nvars);
  int dim = nvars;
  if (q.is_zero()) {
    h.krull_dim = 0;
    h.degree = 0;
    h.numerator = q;
    h.polynomial = UPoly();
    return h;
  }
  const UPoly lin = UPoly(std::vector<Rat>{Rat(1), Rat(-1)});
  while (dim > 0 && q.eval(1) == 0) {
    q = q.exact_div(lin);
    --dim;
  }
  h.krull_dim = dim;
  h.numerator = q;
  Rat deg = q.eval(1);
  h.degree = deg.get_num();
  // HP(d) = sum_i q_i * C(d - i + dim - 1, dim - 1)
  UPoly hp;
  if (dim > 0) {
    for (int i = 0; i <= q.degree(); ++i) {
      if (q.coeff(i) == 0) continue;
      UPoly b = UPoly::constant(1);
      for (int j = 1; j <= dim - 1; ++j)
        b = b * UPoly(std::vector<Rat>{Rat(j - i), Rat(1)}) * (Rat(1) / j);
      hp = hp + b * q.coeff(i);
    }
  }
  h.polynomial = hp;
  return h;
}

Int HilbertData::value(int d) const {
  // coefficient of t^d in Q(t)/(1-t)^krull_dim
  if (d < 0) return 0;
  Rat s = 0;
  for (int i = 0; i <= numerator.degree() && i <= d; ++i) {
    if (krull_dim == 0) {
      if (i == d) s += numerator.coeff(i);
      continue;
    }
    Int b = binomial(static_cast<unsigned>(d - i + krull_dim - 1), static_cast<unsigned>(krull_dim - 1));
    s += numerator.coeff(i) * Rat(b);
  }
  return s.get_num();
}

}  // namespace ratcurve
