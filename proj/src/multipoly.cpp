#include "ratcurve/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ratcurve {

namespace {
const MonomialOrder kCanon = MonomialOrder::grevlex();
bool canon_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return kCanon.compare(a.first, b.first) > 0;
}
}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw MathError("TooManyVariables", "at most " + std::to_string(kMaxVars) + " variables supported");
}

RingPtr Ring::make(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

RingPtr Ring::indexed(const std::string& prefix, int count) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(i));
  return make(std::move(v));
}

int Ring::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw MathError("VariableMismatch", "polynomials live in different rings");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rat& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(Mono{}, c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->size()) throw MathError("VariableMismatch", "variable index out of range");
  MultiPoly p(std::move(ring));
  p.terms_.emplace_back(Mono::var(i), Rat(1));
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name) {
  int i = ring->index(name);
  if (i < 0) throw MathError("VariableMismatch", "unknown variable " + name);
  return variable(std::move(ring), i);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Mono& m, const Rat& c) {
  MultiPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  std::sort(terms.begin(), terms.end(), canon_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  // a zero sum followed by the same monomial cannot happen since equal monomials are adjacent
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.deg);
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.e[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.deg != terms_[0].first.deg) return false;
  return true;
}

Rat MultiPoly::coefficient(const Mono& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  check_ring(o);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size())
      c = -1;
    else if (j == o.terms_.size())
      c = 1;
    else
      c = kCanon.compare(terms_[i].first, o.terms_[j].first);
    if (c > 0)
      r.terms_.push_back(terms_[i++]);
    else if (c < 0)
      r.terms_.push_back(o.terms_[j++]);
    else {
      Rat s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) {
    MultiPoly z(ring_ ? ring_ : o.ring_);
    return z;
  }
  check_ring(o);
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.first * b.first] += a.second * b.second;
  std::vector<Term> v;
  v.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) v.emplace_back(m, std::move(c));
  std::sort(v.begin(), v.end(), canon_greater);
  MultiPoly r(ring_);
  r.terms_ = std::move(v);
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  if (c == 0) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ring_, 1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& d) const {
  if (d.is_zero()) throw MathError("DivisionByZero", "division by the zero polynomial");
  check_ring(d);
  MultiPoly q(ring_), r = *this;
  const Term& ld = d.terms_.front();
  while (!r.is_zero()) {
    const Term& lr = r.terms_.front();
    if (!ld.first.divides(lr.first)) throw MathError("InexactDivision", "polynomial does not divide");
    MultiPoly t = monomial(ring_, lr.first / ld.first, lr.second / ld.second);
    q += t;
    r -= t * d;
  }
  return q;
}

const MultiPoly::Term& MultiPoly::leading_term(const MonomialOrder& ord) const {
  if (is_zero()) throw MathError("ZeroPolynomial", "leading term of zero");
  if (ord.kind() == MonomialOrder::Kind::GRevLex) return terms_.front();
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].first, terms_[best].first) > 0) best = i;
  return terms_[best];
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return *this * (1 / leading_term(ord).second);
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rat> c;
  for (const auto& t : terms_) c.push_back(t.second);
  return *this * primitive_scale(c);
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars()) throw MathError("VariableMismatch", "evaluation point has wrong length");
  Rat r = 0;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < nvars(); ++i)
      if (m.e[i]) v *= rat_pow(point[i], m.e[i]);
    r += v;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars()) throw MathError("VariableMismatch", "substitution list has wrong length");
  RingPtr target;
  for (const auto& im : images)
    if (im.ring_) {
      target = im.ring_;
      break;
    }
  MultiPoly r(target);
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> pw(nvars());
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(constant(target, 1));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (int i = 0; i < nvars(); ++i)
      if (m.e[i]) t = t * power(i, m.e[i]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> v;
  for (const auto& [m, c] : terms_) {
    if (!m.e[var]) continue;
    Mono d = m;
    d.e[var]--;
    d.deg--;
    v.emplace_back(d, c * m.e[var]);
  }
  return from_terms(ring_, std::move(v));
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    MultiPoly r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<int> map(nvars());
  for (int i = 0; i < nvars(); ++i) map[i] = target->index(ring_->name(i));
  std::vector<Term> v;
  for (const auto& [m, c] : terms_) {
    Mono n;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (map[i] < 0) throw MathError("VariableMismatch", "variable " + ring_->name(i) + " missing in target ring");
      n.e[map[i]] = m.e[i];
    }
    n.deg = m.deg;
    v.emplace_back(n, c);
  }
  return from_terms(target, std::move(v));
}

MultiPoly MultiPoly::homogenize(int var) const {
  int d = total_degree();
  std::vector<Term> v;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n.e[var] = static_cast<uint16_t>(n.e[var] + d - m.deg);
    n.deg = static_cast<uint16_t>(d);
    v.emplace_back(n, c);
  }
  return from_terms(ring_, std::move(v));
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(ring_);
  for (const auto& t : terms_)
    if (t.first.deg == d) r.terms_.push_back(t);
  return r;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    bool neg = c < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

std::vector<MultiPoly> interreduce_linear(const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};
  RingPtr ring = nz[0].ring();
  std::map<Mono, int, std::function<bool(const Mono&, const Mono&)>> col(
      [](const Mono& a, const Mono& b) { return kCanon.compare(a, b) > 0; });
  for (const auto& g : nz)
    for (const auto& t : g.terms()) col.emplace(t.first, 0);
  std::vector<Mono> monos;
  int idx = 0;
  for (auto& [m, i] : col) {
    i = idx++;
    monos.push_back(m);
  }
  const int ncol = idx;
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : nz) {
    std::vector<Rat> r(ncol);
    for (const auto& t : g.terms()) r[col[t.first]] = t.second;
    rows.push_back(std::move(r));
  }
  // reduced row echelon form
  int rank = 0;
  for (int c = 0; c < ncol && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = 1 / rows[rank][c];
    for (int j = c; j < ncol; ++j) rows[rank][j] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c];
      for (int j = c; j < ncol; ++j)
        if (rows[rank][j] != 0) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  std::vector<MultiPoly> out;
  for (int r = 0; r < rank; ++r) {
    std::vector<MultiPoly::Term> v;
    for (int j = 0; j < ncol; ++j)
      if (rows[r][j] != 0) v.emplace_back(monos[j], rows[r][j]);
    out.push_back(MultiPoly::from_terms(ring, std::move(v)));
  }
  return out;
}

}  // namespace ratcurve
