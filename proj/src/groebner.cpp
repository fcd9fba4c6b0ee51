#include "ratcurve/groebner.hpp"

#include <algorithm>
#include <limits>

namespace ratcurve {

namespace {

// Integer polynomial with terms sorted descending in the active order.
struct IPoly {
  std::vector<Mono> m;
  std::vector<Int> c;
  int sugar = 0;
  uint32_t lmask = 0;
  bool zero() const { return m.empty(); }
  size_t size() const { return m.size(); }
};

void sort_terms(IPoly& p, const MonomialOrder& ord) {
  std::vector<size_t> idx(p.m.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return ord.compare(p.m[a], p.m[b]) > 0; });
  IPoly q;
  q.sugar = p.sugar;
  for (size_t i : idx) {
    q.m.push_back(p.m[i]);
    q.c.push_back(std::move(p.c[i]));
  }
  p = std::move(q);
  if (!p.zero()) p.lmask = p.m[0].support_mask();
}

// Converts to integers; returns the factor s with ip = s * p.
Rat to_ipoly(const MultiPoly& p, const MonomialOrder& ord, IPoly& out) {
  Int den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  out = IPoly{};
  for (const auto& [m, c] : p.terms()) {
    out.m.push_back(m);
    out.c.push_back(c.get_num() * (den / c.get_den()));
  }
  out.sugar = std::max(p.total_degree(), 0);
  sort_terms(out, ord);
  return Rat(den);
}

Int content(const IPoly& p) {
  Int g = 0;
  for (const auto& c : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IPoly& p) {
  if (p.zero()) return;
  Int g = content(p);
  if (g != 1 && g != 0)
    for (auto& c : p.c) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (p.c[0] < 0)
    for (auto& c : p.c) c = -c;
}

MultiPoly to_multipoly(const IPoly& p, const RingPtr& ring, const Rat& scale = 1) {
  std::vector<MultiPoly::Term> t;
  t.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) t.emplace_back(p.m[i], Rat(p.c[i]) / scale);
  return MultiPoly::from_terms(ring, std::move(t));
}

// p <- a*p - b*t*g where the term of p at `pos` cancels against the lead of t*g.
// Terms before pos are only scaled by a.
void cancel_at(IPoly& p, size_t pos, const Int& a, const Int& b, const Mono& t, const IPoly& g,
               const MonomialOrder& ord) {
  IPoly r;
  r.sugar = std::max(p.sugar, g.sugar + t.deg);
  r.m.reserve(p.size() + g.size());
  r.c.reserve(p.size() + g.size());
  const bool a_one = (a == 1);
  for (size_t i = 0; i < pos; ++i) {
    r.m.push_back(p.m[i]);
    r.c.push_back(a_one ? std::move(p.c[i]) : Int(a * p.c[i]));
  }
  size_t i = pos + 1, j = 1;
  while (i < p.size() || j < g.size()) {
    int cmp;
    Mono tg;
    if (j < g.size()) tg = t * g.m[j];
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ord.compare(p.m[i], tg);
    if (cmp > 0) {
      r.m.push_back(p.m[i]);
      r.c.push_back(a_one ? std::move(p.c[i]) : Int(a * p.c[i]));
      ++i;
    } else if (cmp < 0) {
      r.m.push_back(tg);
      r.c.push_back(-b * g.c[j]);
      ++j;
    } else {
      Int v = a_one ? Int(p.c[i] - b * g.c[j]) : Int(a * p.c[i] - b * g.c[j]);
      if (v != 0) {
        r.m.push_back(tg);
        r.c.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  if (!r.zero()) r.lmask = r.m[0].support_mask();
  p = std::move(r);
}

struct Reducers {
  const std::vector<IPoly>* polys;
  std::vector<int> active;
  // Index of a reducer whose leading monomial divides m, preferring short ones; -1 if none.
  int find(const Mono& m) const {
    const uint32_t mm = m.support_mask();
    int best = -1;
    size_t best_len = std::numeric_limits<size_t>::max();
    for (int idx : active) {
      const IPoly& g = (*polys)[idx];
      if (g.lmask & ~mm) continue;
      if (!g.m[0].divides(m)) continue;
      if (g.size() < best_len) {
        best = idx;
        best_len = g.size();
      }
    }
    return best;
  }
};

// Reduces p modulo the reducers. With full = false only the leading term is
// reduced. Returns the integer multiplier mu such that the result equals mu
// times a Q-linear normal form of the input (mu tracks scalings).
void reduce_ipoly(IPoly& p, const Reducers& red, const MonomialOrder& ord, bool full, Rat* mu) {
  size_t pos = 0;  // terms before pos are irreducible
  int steps = 0;
  while (pos < p.size()) {
    int gi = red.find(p.m[pos]);
    if (gi < 0) {
      if (!full) break;
      ++pos;
      continue;
    }
    const IPoly& g = (*red.polys)[gi];
    Int d;
    mpz_gcd(d.get_mpz_t(), p.c[pos].get_mpz_t(), g.c[0].get_mpz_t());
    Int a = g.c[0] / d, b = p.c[pos] / d;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Mono t = p.m[pos] / g.m[0];
    cancel_at(p, pos, a, b, t, g, ord);
    if (a != 1 && mu) *mu *= a;
    if ((++steps & 3) == 0 || a != 1) {
      Int gc = content(p);
      if (gc > 1) {
        for (auto& c : p.c) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), gc.get_mpz_t());
        if (mu) *mu /= gc;
      }
    }
  }
  if (!p.zero()) p.lmask = p.m[0].support_mask();
}

struct Pair {
  int i, j;
  Mono lcm;
  int sugar;
};

IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& ord) {
  Mono l = f.m[0].lcm(g.m[0]);
  Mono tf = l / f.m[0], tg = l / g.m[0];
  Int d;
  mpz_gcd(d.get_mpz_t(), f.c[0].get_mpz_t(), g.c[0].get_mpz_t());
  Int a = g.c[0] / d, b = f.c[0] / d;
  IPoly p;
  p.sugar = f.sugar + tf.deg;
  p.m.reserve(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    p.m.push_back(f.m[i] * tf);
    p.c.push_back(f.c[i]);
  }
  // lead of p is f.c[0]*l; a*p - b*tg*g cancels it
  cancel_at(p, 0, a, b, tg, g, ord);
  return p;
}

}  // namespace

std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, const MonomialOrder& ord) {
  RingPtr ring;
  std::vector<IPoly> polys;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring();
    if (g.is_zero()) continue;
    if (!same_ring(ring, g.ring())) throw MathError("VariableMismatch", "generators live in different rings");
    IPoly ip;
    to_ipoly(g, ord, ip);
    make_primitive(ip);
    polys.push_back(std::move(ip));
  }
  if (polys.empty()) return {};

  // Start from inter-reduced input: sorting by leading monomial keeps the pair set small.
  std::sort(polys.begin(), polys.end(), [&](const IPoly& a, const IPoly& b) {
    int c = ord.compare(a.m[0], b.m[0]);
    return c != 0 ? c < 0 : a.size() < b.size();
  });

  std::vector<IPoly> basis;
  std::vector<Pair> pairs;
  Reducers red{&basis, {}};

  auto unit = [&]() { return std::vector<MultiPoly>{MultiPoly::constant(ring, 1)}; };

  auto insert = [&](IPoly h) {
    const int hi = static_cast<int>(basis.size());
    const Mono& lh = h.m[0];
    // Gebauer-Moeller update
    std::vector<Pair> cand;
    for (int g : red.active) {
      Pair p{g, hi, basis[g].m[0].lcm(lh), 0};
      Mono tg = p.lcm / basis[g].m[0], th = p.lcm / lh;
      p.sugar = std::max(basis[g].sugar + tg.deg, h.sugar + th.deg);
      cand.push_back(p);
    }
    std::vector<Pair> keep;
    for (size_t a = 0; a < cand.size(); ++a) {
      const Pair& p = cand[a];
      bool coprime = basis[p.i].m[0].coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (size_t b = a + 1; b < cand.size() && !dominated; ++b)
          if (cand[b].lcm.divides(p.lcm)) dominated = true;
        for (size_t b = 0; b < keep.size() && !dominated; ++b)
          if (keep[b].lcm.divides(p.lcm)) dominated = true;
      }
      if (coprime || !dominated) keep.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : keep)
      if (!basis[p.i].m[0].coprime(lh)) fresh.push_back(p);
    std::vector<Pair> np;
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && basis[p.i].m[0].lcm(lh) != p.lcm && basis[p.j].m[0].lcm(lh) != p.lcm;
      if (!drop) np.push_back(p);
    }
    for (auto& p : fresh) np.push_back(p);
    pairs = std::move(np);
    std::vector<int> na;
    for (int g : red.active)
      if (!lh.divides(basis[g].m[0])) na.push_back(g);
    basis.push_back(std::move(h));
    na.push_back(hi);
    red.active = std::move(na);
  };

  for (auto& p : polys) {
    reduce_ipoly(p, red, ord, true, nullptr);
    if (p.zero()) continue;
    make_primitive(p);
    if (p.m[0].is_one()) return unit();
    insert(std::move(p));
  }

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    IPoly s = spoly(basis[pr.i], basis[pr.j], ord);
    s.sugar = pr.sugar;
    if (s.zero()) continue;
    make_primitive(s);
    reduce_ipoly(s, red, ord, true, nullptr);
    if (s.zero()) continue;
    make_primitive(s);
    if (s.m[0].is_one()) return unit();
    insert(std::move(s));
  }

  // Reduced basis: tail-reduce the minimal generators against each other.
  std::vector<int> mins = red.active;
  std::sort(mins.begin(), mins.end(),
            [&](int a, int b) { return ord.compare(basis[a].m[0], basis[b].m[0]) < 0; });
  std::vector<MultiPoly> out;
  for (int idx : mins) {
    Reducers others{&basis, {}};
    for (int o : mins)
      if (o != idx) others.active.push_back(o);
    IPoly p = basis[idx];
    // The leading term is irreducible by the others (minimal basis); reduce the tail.
    IPoly head;
    head.m.push_back(p.m[0]);
    head.c.push_back(p.c[0]);
    IPoly tail;
    tail.m.assign(p.m.begin() + 1, p.m.end());
    tail.c.assign(p.c.begin() + 1, p.c.end());
    Rat mu = 1;
    reduce_ipoly(tail, others, ord, true, &mu);
    // result = head + tail/mu; normalize to monic over Q
    Rat lc = Rat(head.c[0]);
    std::vector<MultiPoly::Term> t;
    t.emplace_back(head.m[0], Rat(1));
    for (size_t i = 0; i < tail.size(); ++i) t.emplace_back(tail.m[i], Rat(tail.c[i]) / (mu * lc));
    out.push_back(MultiPoly::from_terms(ring, std::move(t)));
  }
  return out;
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& G, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  std::vector<IPoly> polys;
  Reducers red{&polys, {}};
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), p.ring())) throw MathError("VariableMismatch", "reduction across rings");
    IPoly ip;
    to_ipoly(g, ord, ip);
    make_primitive(ip);
    red.active.push_back(static_cast<int>(polys.size()));
    polys.push_back(std::move(ip));
  }
  IPoly ip;
  Rat mu = to_ipoly(p, ord, ip);
  reduce_ipoly(ip, red, ord, true, &mu);
  return to_multipoly(ip, p.ring(), mu);
}

bool is_groebner(const std::vector<MultiPoly>& G, const MonomialOrder& ord) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      const auto& [mi, ci] = G[i].leading_term(ord);
      const auto& [mj, cj] = G[j].leading_term(ord);
      Mono l = mi.lcm(mj);
      MultiPoly s = G[i] * MultiPoly::monomial(G[i].ring(), l / mi, 1 / ci) -
                    G[j] * MultiPoly::monomial(G[j].ring(), l / mj, 1 / cj);
      if (!reduce(s, G, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace ratcurve
