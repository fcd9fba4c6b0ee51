#include "ratcurve/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace ratcurve {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : deg_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || static_cast<int>(c_.size()) != degree + 1)
    throw MathError("BadForm", "binary form needs exactly degree+1 coefficients");
}

BinaryForm BinaryForm::zero(int degree) { return BinaryForm(degree, std::vector<Rat>(degree + 1)); }

BinaryForm BinaryForm::s_power(int a, int b) {
  BinaryForm f = zero(a + b);
  f.c_[b] = 1;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (o.deg_ != deg_) throw MathError("DegreeMismatch", "adding forms of different degree");
  BinaryForm r = *this;
  for (int i = 0; i <= deg_; ++i) r.c_[i] += o.c_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + o * Rat(-1); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r = zero(deg_ + o.deg_);
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j <= o.deg_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::operator*(const Rat& c) const {
  BinaryForm r = *this;
  for (auto& q : r.c_) q *= c;
  return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm r = s_power(0, 0);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BinaryForm BinaryForm::exact_div(const BinaryForm& d) const {
  if (d.is_zero()) throw MathError("DivisionByZero", "binary form division by zero");
  int m = deg_ - d.deg_;
  if (m < 0) throw MathError("InexactDivision", "divisor degree exceeds dividend degree");
  if (is_zero()) return zero(m);
  auto [q, r] = dehomogenize_s().divmod(d.dehomogenize_s());
  if (!r.is_zero() || q.degree() > m) throw MathError("InexactDivision", "binary form does not divide");
  return homogenize_s(q, m);
}

bool BinaryForm::divides(const BinaryForm& f) const {
  try {
    (void)f.exact_div(*this);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  return *this * primitive_scale(c_);
}

bool BinaryForm::associate_of(const BinaryForm& o) const {
  return deg_ == o.deg_ && normalized() == o.normalized();
}

int BinaryForm::t_valuation() const {
  int v = 0;
  while (v <= deg_ && c_[v] == 0) ++v;
  return v;
}

int BinaryForm::s_valuation() const {
  int v = 0;
  while (v <= deg_ && c_[deg_ - v] == 0) ++v;
  return v;
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
  Rat r = 0;
  for (int p = 0; p <= deg_; ++p) {
    if (c_[p] == 0) continue;
    r += c_[p] * rat_pow(s, deg_ - p) * rat_pow(t, p);
  }
  return r;
}

UPoly BinaryForm::dehomogenize_s() const { return UPoly(c_); }

UPoly BinaryForm::dehomogenize_t() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

BinaryForm BinaryForm::homogenize_t(const UPoly& p, int degree) {
  if (p.degree() > degree) throw MathError("DegreeMismatch", "homogenization degree too small");
  BinaryForm f = zero(degree);
  for (int i = 0; i <= p.degree(); ++i) f.c_[degree - i] = p.coeff(i);
  return f;
}

BinaryForm BinaryForm::homogenize_s(const UPoly& p, int degree) {
  if (p.degree() > degree) throw MathError("DegreeMismatch", "homogenization degree too small");
  BinaryForm f = zero(degree);
  for (int i = 0; i <= p.degree(); ++i) f.c_[i] = p.coeff(i);
  return f;
}

std::vector<Rat> shear_coefficients(const std::vector<Rat>& x, const Rat& c) {
  const int k = static_cast<int>(x.size()) - 1;
  std::vector<Rat> out(k + 1);
  for (int j = 0; j <= k; ++j)
    for (int i = j; i <= k; ++i) {
      if (x[i] == 0) continue;
      out[j] += Rat(binomial(i, j)) * rat_pow(c, i - j) * x[i];
    }
  return out;
}

BinaryForm BinaryForm::shear(const Rat& c) const { return BinaryForm(deg_, shear_coefficients(c_, c)); }

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p <= deg_; ++p) {
    if (c_[p] == 0) continue;
    Rat a = abs(c_[p]);
    bool neg = c_[p] < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    int es = deg_ - p, et = p;
    std::string mono;
    if (es > 0) mono += es == 1 ? "s" : "s^" + std::to_string(es);
    if (et > 0) mono += std::string(mono.empty() ? "" : "*") + (et == 1 ? "t" : "t^" + std::to_string(et));
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Splits f = s^a t^b core with core(1,0) != 0 and core(0,1) != 0.
struct Split {
  int sv, tv;
  UPoly core;  // core(1,u), degree equals deg core
};

Split split_form(const BinaryForm& f) {
  int tv = f.t_valuation(), sv = f.s_valuation();
  std::vector<Rat> c(f.coeffs().begin() + tv, f.coeffs().end() - sv);
  return {sv, tv, UPoly(std::move(c))};
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  bool fz = f.is_zero(), gz = g.is_zero();
  if (fz && gz) throw MathError("BothZero", "gcd of two zero forms");
  if (fz) return g.normalized();
  if (gz) return f.normalized();
  Split a = split_form(f), b = split_form(g);
  UPoly h = gcd(a.core, b.core);
  int sv = std::min(a.sv, b.sv), tv = std::min(a.tv, b.tv);
  BinaryForm core = BinaryForm::homogenize_s(h, h.degree());
  return (core * BinaryForm::s_power(sv, tv)).normalized();
}

BinaryForm binary_gcd(const std::vector<BinaryForm>& fs) {
  if (fs.empty()) throw MathError("BothZero", "gcd of empty list");
  BinaryForm g = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) {
    if (g.is_zero() && fs[i].is_zero()) continue;
    g = binary_gcd(g, fs[i]);
  }
  if (g.is_zero()) throw MathError("BothZero", "gcd of zero forms");
  return g.normalized();
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw MathError("ZeroForm", "squarefree decomposition of the zero form");
  std::vector<std::pair<BinaryForm, int>> out;
  Split sp = split_form(f);
  if (sp.sv > 0) out.emplace_back(BinaryForm::s_power(1, 0), sp.sv);
  if (sp.tv > 0) out.emplace_back(BinaryForm::s_power(0, 1), sp.tv);
  for (auto& [g, m] : squarefree_factors(sp.core))
    out.emplace_back(BinaryForm::homogenize_s(g, g.degree()).normalized(), m);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return std::lexicographical_compare(y.first.coeffs().begin(), y.first.coeffs().end(),
                                        x.first.coeffs().begin(), x.first.coeffs().end());
  });
  return out;
}

}  // namespace ratcurve
