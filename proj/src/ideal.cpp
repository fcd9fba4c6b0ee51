#include "ratcurve/ideal.hpp"

#include <algorithm>

#include "ratcurve/zerodim.hpp"

namespace ratcurve {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw MathError("VariableMismatch", "generator outside the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = MultiPoly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

const std::vector<MultiPoly>& Ideal::gb(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  const std::string key = ord.describe();
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return it->second;
  auto res = groebner(gens_, ord);
  return cache_->bases.emplace(key, std::move(res)).first->second;
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_constant() && !g[0].is_zero();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::contains(const MultiPoly& p) const { return reduce(p, gb(), MonomialOrder::grevlex()).is_zero(); }

bool Ideal::contains(const Ideal& j) const {
  for (const auto& g : j.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  const auto& a = gb();
  const auto& b = o.gb();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<MultiPoly> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator+(const MultiPoly& p) const {
  std::vector<MultiPoly> g = gens_;
  g.push_back(p);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& o) const {
  std::vector<MultiPoly> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<MultiPoly> g;
  for (const auto& p : gens_) g.push_back(p.in_ring(target));
  return Ideal(target, std::move(g));
}

std::vector<MultiPoly> Ideal::canonical_generators() const {
  std::vector<MultiPoly> out;
  for (const auto& g : gb()) out.push_back(g.primitive());
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  auto g = canonical_generators();
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += g[i].to_string();
  }
  return s + ")";
}

PointPk PointPk::from_rational(std::vector<Rat> coords) {
  Rat lead = 0;
  for (const auto& c : coords)
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0) throw MathError("ZeroPoint", "all coordinates vanish");
  PointPk p;
  p.exact = true;
  for (auto& c : coords) {
    c /= lead;
    p.z.push_back(Complex::from_rat(c));
  }
  p.q = std::move(coords);
  return p;
}

bool PointPk::is_real() const { return exact || theta.real; }

std::string PointPk::to_string(int digits) const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ":";
    s += exact ? ratcurve::to_string(q[i]) : z[i].to_string(digits);
  }
  return s + ")";
}

Real projective_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  // sine of the angle: |a ^ b| / (|a| |b|), free of cancellation near 0
  int bits = kDefaultPrecisionBits;
  for (const auto& z : a) bits = std::max<int>(bits, static_cast<int>(z.re.precision() * 3.33));
  PrecisionGuard g(bits);
  Real na = 0, nb = 0, w = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    na += a[i].norm2();
    nb += b[i].norm2();
    for (size_t j = i + 1; j < a.size(); ++j) w += (a[i] * b[j] - a[j] * b[i]).norm2();
  }
  return boost::multiprecision::sqrt(w / (na * nb));
}

std::vector<MultiPoly> groebner_basis(const Ideal& I, const MonomialOrder& ord) { return I.gb(ord); }

MultiPoly normal_form(const MultiPoly& p, const Ideal& I, const MonomialOrder& ord) {
  if (!same_ring(p.ring(), I.ring()) && !p.is_zero())
    throw MathError("VariableMismatch", "normal form across rings");
  return reduce(p, I.gb(ord), ord);
}

Ideal eliminate(const Ideal& I, const std::vector<int>& front) {
  const RingPtr& r = I.ring();
  std::vector<bool> is_front(r->size(), false);
  for (int i : front) is_front.at(i) = true;
  std::vector<std::string> back;
  for (int i = 0; i < r->size(); ++i)
    if (!is_front[i]) back.push_back(r->name(i));
  if (back.empty()) throw MathError("EmptyBack", "eliminating every variable");
  RingPtr br = Ring::make(back);
  uint32_t mask = 0;
  for (int i : front) mask |= (1u << i);
  const auto& g = I.gb(MonomialOrder::block(front));
  std::vector<MultiPoly> keep;
  for (const auto& p : g) {
    bool free = true;
    for (const auto& [m, c] : p.terms())
      if (m.support_mask() & mask) {
        free = false;
        break;
      }
    if (free) keep.push_back(p.in_ring(br));
  }
  return Ideal(br, std::move(keep));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& front) {
  std::vector<int> idx;
  for (const auto& n : front) {
    int i = I.ring()->index(n);
    if (i < 0) throw MathError("VariableMismatch", "unknown variable " + n);
    idx.push_back(i);
  }
  return eliminate(I, idx);
}

namespace {

RingPtr with_extra(const RingPtr& r, const std::string& name) {
  auto names = r->names();
  names.insert(names.begin(), name);
  return Ring::make(names);
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  RingPtr er = with_extra(I.ring(), "_t");
  MultiPoly t = MultiPoly::variable(er, 0);
  MultiPoly one_t = MultiPoly::constant(er, 1) - t;
  std::vector<MultiPoly> g;
  for (const auto& p : I.gens()) g.push_back(t * p.in_ring(er));
  for (const auto& p : J.gens()) g.push_back(one_t * p.in_ring(er));
  Ideal e = eliminate(Ideal(er, std::move(g)), std::vector<int>{0});
  return e.in_ring(I.ring());
}

Ideal colon(const Ideal& I, const MultiPoly& g) {
  if (g.is_zero()) return Ideal::unit(I.ring());
  Ideal inter = intersect(I, Ideal(I.ring(), {g}));
  std::vector<MultiPoly> out;
  for (const auto& p : inter.gb()) out.push_back(p.exact_divide(g));
  return Ideal(I.ring(), std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  Ideal acc = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& g : J.gens()) {
    Ideal c = colon(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const MultiPoly& g) {
  if (g.is_zero()) return Ideal::unit(I.ring());
  if (g.is_constant()) return I;
  // Rabinowitsch: (I + (1 - y g)) intersected with K[x]
  RingPtr er = with_extra(I.ring(), "_y");
  MultiPoly y = MultiPoly::variable(er, 0);
  std::vector<MultiPoly> gens;
  for (const auto& p : I.gens()) gens.push_back(p.in_ring(er));
  gens.push_back(MultiPoly::constant(er, 1) - y * g.in_ring(er));
  Ideal e = eliminate(Ideal(er, std::move(gens)), std::vector<int>{0});
  return e.in_ring(I.ring());
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring());
  Ideal acc = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& g : J.gens()) {
    Ideal c = saturate(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

HilbertData hilbert(const Ideal& I) {
  if (!I.is_homogeneous()) throw MathError("NotHomogeneous", "Hilbert data needs a homogeneous ideal");
  std::vector<Mono> lm;
  const auto ord = MonomialOrder::grevlex();
  for (const auto& g : I.gb(ord)) lm.push_back(g.leading_term(ord).first);
  return hilbert_data(lm, I.ring()->size());
}

int projective_degree(const Ideal& I) {
  HilbertData h = hilbert(I);
  if (h.krull_dim > 1) throw MathError("NotZeroDimensional", "projective zero set is positive-dimensional");
  return h.krull_dim == 0 ? 0 : static_cast<int>(h.degree.get_si());
}

bool is_irrelevant(const Ideal& I) { return hilbert(I).krull_dim == 0; }

namespace {

struct ZeroDimSetup {
  Chart chart;
  Ideal affine;
};

ZeroDimSetup setup(const Ideal& I) {
  if (!I.is_homogeneous()) throw MathError("NotHomogeneous", "expected a homogeneous ideal");
  HilbertData h = hilbert(I);
  if (h.krull_dim > 1) throw MathError("NotZeroDimensional", "projective zero set is positive-dimensional");
  Chart c = Chart::choose(I);
  Ideal a = c.to_affine(I);
  return {c, a};
}

}  // namespace

Ideal radical_zero_dim(const Ideal& I) {
  if (!I.is_homogeneous()) throw MathError("NotHomogeneous", "expected a homogeneous ideal");
  if (is_irrelevant(I)) return Ideal::unit(I.ring());
  auto s = setup(I);
  Ideal rad = affine_radical(s.affine);
  return s.chart.to_projective(rad);
}

namespace {

Complex eval_upoly_c(const UPoly& p, const Complex& z) {
  Complex acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * z;
    acc.re += to_real(p.coeff(i));
  }
  return acc;
}

bool point_less(const PointPk& a, const PointPk& b) {
  if (a.exact != b.exact) return a.exact;
  if (a.exact) return a.q < b.q;
  if (a.theta_poly.degree() != b.theta_poly.degree()) return a.theta_poly.degree() < b.theta_poly.degree();
  for (int i = 0; i < a.size(); ++i) {
    if (a.z[i].re != b.z[i].re) return a.z[i].re < b.z[i].re;
    if (a.z[i].im != b.z[i].im) return a.z[i].im < b.z[i].im;
  }
  return false;
}

}  // namespace

std::vector<PointPk> solve_points(const Ideal& I, int precision_bits) {
  if (!I.is_homogeneous()) throw MathError("NotHomogeneous", "expected a homogeneous ideal");
  if (is_irrelevant(I)) return {};
  auto s = setup(I);
  QuotientAlgebra A(s.affine);
  const int N = A.dim();
  if (N != projective_degree(I)) throw MathError("NotReduced", "scheme is not reduced (degree mismatch)");
  MultiPoly th = separating_element(A);
  QMatrix Mt = A.mult_matrix(th);
  UPoly m = krylov_minpoly(Mt, A.one());
  if (m.degree() != N) throw MathError("NotReduced", "scheme is not reduced");
  // Krylov basis v_k = theta^k
  std::vector<QVec> kb;
  QVec v = A.one();
  for (int k = 0; k < N; ++k) {
    kb.push_back(v);
    v = Mt * v;
  }
  QMatrix V = QMatrix::from_columns(kb, N);
  auto Vinv = inverse(V);
  if (!Vinv) throw MathError("Internal", "Krylov basis is singular");
  // projective coordinates as polynomials in theta
  std::vector<UPoly> P;
  for (const auto& cf : s.chart.coordinate_functions()) {
    QVec a = (*Vinv) * A.coords(cf);
    P.push_back(UPoly(a));
  }
  // split by zero pattern
  std::vector<UPoly> groups{m.monic()};
  for (const auto& Pi : P) {
    std::vector<UPoly> next;
    for (const auto& g : groups) {
      UPoly h = gcd(g, Pi % g);
      if (h.is_zero() || h.degree() == 0 || h.degree() == g.degree()) {
        next.push_back(g);
        continue;
      }
      next.push_back(h);
      next.push_back(g.exact_div(h).monic());
    }
    groups = std::move(next);
  }
  std::vector<PointPk> out;
  for (const auto& g : groups) {
    int first = -1;
    for (int i = 0; i < static_cast<int>(P.size()); ++i)
      if (!(P[i] % g).is_zero()) {
        first = i;
        break;
      }
    if (first < 0) throw MathError("Internal", "point with all coordinates zero");
    UPoly inv = inverse_mod(P[first] % g, g);
    std::vector<UPoly> Q;
    for (const auto& Pi : P) Q.push_back((Pi * inv) % g);
    for (auto& r : isolate_roots(g, precision_bits)) {
      PointPk pt;
      if (r.exact) {
        std::vector<Rat> c;
        for (const auto& q : Q) c.push_back(q.eval(r.q));
        pt = PointPk::from_rational(std::move(c));
      } else {
        PrecisionGuard guard(r.precision_bits);
        for (const auto& q : Q) pt.z.push_back(eval_upoly_c(q, r.z));
        if (r.real)
          for (auto& z : pt.z) z.im = 0;
        pt.theta_poly = g;
        pt.coord_polys = Q;
        pt.theta = r;
      }
      out.push_back(std::move(pt));
    }
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

std::vector<LengthClass> length_classes(const Ideal& I, int precision_bits) {
  if (!I.is_homogeneous()) throw MathError("NotHomogeneous", "expected a homogeneous ideal");
  if (is_irrelevant(I)) return {};
  auto s = setup(I);
  QuotientAlgebra A(s.affine);
  Ideal rad = affine_radical(s.affine);
  QuotientAlgebra B(rad);
  MultiPoly th = separating_element(B);
  UPoly chi = charpoly(A.mult_matrix(th));
  std::vector<LengthClass> out;
  for (const auto& [g, e] : squarefree_factors(chi)) {
    LengthClass lc;
    lc.length = e;
    Ideal w = rad + eval_upoly(g, th);
    lc.support = s.chart.to_projective(w);
    lc.points = solve_points(lc.support, precision_bits);
    out.push_back(std::move(lc));
  }
  return out;
}

namespace {

bool point_on(const Ideal& support, const PointPk& P) {
  if (P.exact) {
    for (const auto& g : support.gens())
      if (g.evaluate(P.q) != 0) return false;
    return true;
  }
  return false;
}

const LengthClass* find_class(const std::vector<LengthClass>& cls, const PointPk& P) {
  if (P.exact) {
    for (const auto& c : cls)
      if (point_on(c.support, P)) return &c;
    return nullptr;
  }
  const LengthClass* best = nullptr;
  Real bd = 1;
  for (const auto& c : cls)
    for (const auto& q : c.points) {
      Real d = projective_distance(q.z, P.z);
      if (!best || d < bd) {
        best = &c;
        bd = d;
      }
    }
  if (best && bd < Real(1e-6)) return best;
  return nullptr;
}

}  // namespace

int local_length(const Ideal& I, const PointPk& P) {
  auto cls = length_classes(I);
  const LengthClass* c = find_class(cls, P);
  if (!c) throw MathError("PointNotOnScheme", "point does not lie on the scheme");
  return c->length;
}

Ideal point_ideal(const RingPtr& ring, const std::vector<Rat>& c) {
  // 2x2 minors x_i c_j - x_j c_i against the first nonzero coordinate
  int f = -1;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] != 0) {
      f = i;
      break;
    }
  if (f < 0) throw MathError("ZeroPoint", "all coordinates vanish");
  std::vector<MultiPoly> g;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (i != f)
      g.push_back(MultiPoly::variable(ring, i) * c[f] - MultiPoly::variable(ring, f) * c[i]);
  return Ideal(ring, std::move(g));
}

bool curvilinear_check(const Ideal& I, const PointPk& P) {
  if (P.exact) {
    Ideal m = point_ideal(I.ring(), P.q);
    local_length(I, P);  // throws when P is off the scheme
    return local_length(I + m * m, P) <= 2;
  }
  auto cls = length_classes(I);
  const LengthClass* c = find_class(cls, P);
  if (!c) throw MathError("PointNotOnScheme", "point does not lie on the scheme");
  if (c->length <= 1) return true;
  Ideal W = c->support;
  return projective_degree(I + W * W) == 2 * static_cast<int>(c->points.size());
}

}  // namespace ratcurve
