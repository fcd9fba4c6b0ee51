#include "ratcurve/upoly.hpp"

#include <sstream>

namespace ratcurve {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(const Rat& c, int deg) {
  std::vector<Rat> v(deg + 1);
  v[deg] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& s) const {
  if (s == 0) return {};
  UPoly r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw MathError("DivisionByZero", "univariate division by zero");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo(degree() - d.degree() + 1);
  Rat inv = 1 / d.lc();
  for (int i = degree(); i >= d.degree(); --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] * inv;
    quo[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
  }
  rem.resize(d.degree());
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw MathError("InexactDivision", "univariate division leaves a remainder");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (1 / lc());
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Rat f = primitive_scale(c_);
  UPoly r = *this * f;
  if (r.lc() < 0) r = -r;
  return r;
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> r(degree());
  for (int i = 1; i <= degree(); ++i) r[i - 1] = c_[i] * i;
  return UPoly(std::move(r));
}

Rat UPoly::eval(const Rat& v) const {
  Rat r = 0;
  for (int i = degree(); i >= 0; --i) r = r * v + c_[i];
  return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly r;
  for (int i = degree(); i >= 0; --i) r = r * inner + UPoly::constant(c_[i]);
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rat a = abs(c_[i]);
    bool neg = c_[i] < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() < 1) return f.is_zero() ? f : UPoly::constant(1);
  return f.exact_div(gcd(f, f.derivative())).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  UPoly fm = f.monic();
  UPoly a0 = gcd(fm, fm.derivative());
  UPoly b = fm.exact_div(a0);
  UPoly c = fm.derivative().exact_div(a0);
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {
int sign_changes(const std::vector<int>& s) {
  int n = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++n;
    last = v;
  }
  return n;
}
int sgn(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
}  // namespace

int count_real_roots(const UPoly& f0) {
  UPoly f = squarefree_part(f0);
  if (f.degree() < 1) return 0;
  std::vector<UPoly> seq{f, f.derivative()};
  while (true) {
    UPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r.primitive() * Rat(sgn(r.lc())));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& p : seq) {
    int d = p.degree();
    at_pos.push_back(sgn(p.lc()));
    at_neg.push_back((d % 2 == 0) ? sgn(p.lc()) : -sgn(p.lc()));
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(1), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

}  // namespace ratcurve
