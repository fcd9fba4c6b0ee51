#include "ratcurve/zerodim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>

namespace ratcurve {

Chart::Chart(RingPtr proj, std::vector<Rat> form) : proj_(std::move(proj)), form_(std::move(form)) {
  if (static_cast<int>(form_.size()) != proj_->size()) throw MathError("DimensionMismatch", "chart form size");
  pivot_ = -1;
  for (int i = 0; i < proj_->size(); ++i)
    if (form_[i] != 0) {
      pivot_ = i;
      break;
    }
  if (pivot_ < 0) throw MathError("BadChart", "zero linear form");
  std::vector<std::string> names;
  for (int i = 0; i < proj_->size(); ++i)
    if (i != pivot_) names.push_back(proj_->name(i));
  aff_ = Ring::make(std::move(names));
}

Chart Chart::variable(RingPtr proj, int i) {
  std::vector<Rat> f(proj->size());
  f[i] = 1;
  return Chart(std::move(proj), std::move(f));
}

Chart Chart::choose(const Ideal& I) {
  const RingPtr& r = I.ring();
  const int n = r->size();
  for (int i = 0; i < n; ++i) {
    Chart c = variable(r, i);
    if (is_irrelevant(I + c.form_poly())) return c;
  }
  for (int c = 2; c < 200; ++c) {
    std::vector<Rat> f(n);
    Rat p = 1;
    for (int i = 0; i < n; ++i) {
      f[i] = p;
      p *= c;
    }
    Chart ch(r, f);
    if (is_irrelevant(I + ch.form_poly())) return ch;
  }
  throw MathError("NotZeroDimensional", "no chart avoids the zero set");
}

MultiPoly Chart::form_poly() const {
  MultiPoly l(proj_);
  for (int i = 0; i < proj_->size(); ++i)
    if (form_[i] != 0) l += MultiPoly::variable(proj_, i) * form_[i];
  return l;
}

std::vector<MultiPoly> Chart::coordinate_functions() const {
  std::vector<MultiPoly> img;
  MultiPoly piv = MultiPoly::constant(aff_, 1);
  for (int i = 0; i < proj_->size(); ++i)
    if (i != pivot_ && form_[i] != 0) piv -= MultiPoly::variable(aff_, proj_->name(i)) * form_[i];
  piv = piv * (Rat(1) / form_[pivot_]);
  for (int i = 0; i < proj_->size(); ++i)
    img.push_back(i == pivot_ ? piv : MultiPoly::variable(aff_, proj_->name(i)));
  return img;
}

MultiPoly Chart::to_affine(const MultiPoly& p) const { return p.substitute(coordinate_functions()); }

Ideal Chart::to_affine(const Ideal& I) const {
  std::vector<MultiPoly> g;
  auto img = coordinate_functions();
  for (const auto& p : I.gens()) g.push_back(p.substitute(img));
  return Ideal(aff_, std::move(g));
}

MultiPoly Chart::to_projective(const MultiPoly& q) const {
  if (q.is_zero()) return MultiPoly(proj_);
  const int D = q.total_degree();
  MultiPoly l = form_poly();
  std::vector<MultiPoly> lp(D + 1);
  lp[0] = MultiPoly::constant(proj_, 1);
  for (int i = 1; i <= D; ++i) lp[i] = lp[i - 1] * l;
  MultiPoly out(proj_);
  std::vector<MultiPoly::Term> buf;
  for (int d = 0; d <= D; ++d) {
    MultiPoly part = q.homogeneous_part(d);
    if (part.is_zero()) continue;
    out += part.in_ring(proj_) * lp[D - d];
  }
  return out;
}

Ideal Chart::to_projective(const Ideal& J) const {
  std::vector<MultiPoly> g;
  for (const auto& p : J.gb()) g.push_back(to_projective(p));
  return Ideal(proj_, std::move(g));
}

QuotientAlgebra::QuotientAlgebra(const Ideal& J) : ring_(J.ring()) {
  gb_ = J.gb();
  const auto ord = MonomialOrder::grevlex();
  std::vector<Mono> lms;
  for (const auto& g : gb_) lms.push_back(g.leading_term(ord).first);
  const int n = ring_->size();
  // zero-dimensional iff every variable has a pure power among the leading monomials
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& m : lms)
      if (m.e[i] == m.deg && m.deg > 0) pure = true;
    if (!pure && !(lms.size() == 1 && lms[0].is_one()))
      throw MathError("NotZeroDimensional", "affine ideal is not zero-dimensional");
  }
  auto standard = [&](const Mono& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  std::deque<Mono> queue;
  if (standard(Mono{})) {
    queue.push_back(Mono{});
    index_[Mono{}] = 0;
    basis_.push_back(Mono{});
  }
  while (!queue.empty()) {
    Mono m = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Mono nm = m * Mono::var(i);
      if (index_.count(nm) || !standard(nm)) continue;
      index_[nm] = static_cast<int>(basis_.size());
      basis_.push_back(nm);
      queue.push_back(nm);
    }
  }
  var_mats_.resize(n);
  var_done_.assign(n, false);
}

QVec QuotientAlgebra::coords(const MultiPoly& p) const {
  QVec v(dim());
  MultiPoly r = reduce(p, gb_, MonomialOrder::grevlex());
  for (const auto& [m, c] : r.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw MathError("Internal", "normal form outside the standard basis");
    v[it->second] = c;
  }
  return v;
}

MultiPoly QuotientAlgebra::element(const QVec& v) const {
  std::vector<MultiPoly::Term> t;
  for (int i = 0; i < dim(); ++i)
    if (v[i] != 0) t.emplace_back(basis_[i], v[i]);
  return MultiPoly::from_terms(ring_, std::move(t));
}

QVec QuotientAlgebra::one() const { return coords(MultiPoly::constant(ring_, 1)); }

QMatrix QuotientAlgebra::mult_matrix(const MultiPoly& p) const {
  std::vector<QVec> cols;
  for (const auto& b : basis_) cols.push_back(coords(p * MultiPoly::monomial(ring_, b)));
  return QMatrix::from_columns(cols, dim());
}

const QMatrix& QuotientAlgebra::var_matrix(int i) const {
  if (!var_done_[i]) {
    var_mats_[i] = mult_matrix(MultiPoly::variable(ring_, i));
    var_done_[i] = true;
  }
  return var_mats_[i];
}

MultiPoly eval_upoly(const UPoly& u, const MultiPoly& x) {
  MultiPoly acc(x.ring());
  for (int i = u.degree(); i >= 0; --i) acc = acc * x + MultiPoly::constant(x.ring(), u.coeff(i));
  return acc;
}

Ideal affine_radical(const Ideal& J) {
  if (J.is_unit()) return J;
  QuotientAlgebra A(J);
  std::vector<MultiPoly> g = A.gb();
  for (int i = 0; i < J.ring()->size(); ++i) {
    UPoly m = minpoly(A.var_matrix(i));
    UPoly sq = squarefree_part(m);
    if (sq.degree() < m.degree()) g.push_back(eval_upoly(sq, MultiPoly::variable(J.ring(), i)));
  }
  return Ideal(J.ring(), std::move(g));
}

MultiPoly separating_element(const QuotientAlgebra& A) {
  const int n = A.ring()->size();
  const int N = A.dim();
  auto works = [&](const MultiPoly& th) { return krylov_minpoly(A.mult_matrix(th), A.one()).degree() == N; };
  if (n == 0) return MultiPoly::constant(A.ring(), 0);
  for (int i = 0; i < n; ++i) {
    MultiPoly v = MultiPoly::variable(A.ring(), i);
    if (works(v)) return v;
  }
  for (int c = 2; c < 500; ++c) {
    MultiPoly th(A.ring());
    Rat p = 1;
    for (int i = 0; i < n; ++i) {
      th += MultiPoly::variable(A.ring(), i) * p;
      p *= c;
    }
    if (works(th)) return th;
  }
  throw MathError("Internal", "no separating element found");
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // extended Euclid: s*a + t*m = g
  UPoly r0 = m, r1 = a % m, s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw MathError("NotInvertible", "polynomial not invertible modulo m");
  return (s0 * (Rat(1) / r0.lc())) % m;
}

std::vector<QVec> intersect_spans(const std::vector<QVec>& a, const std::vector<QVec>& b, int n) {
  if (a.empty() || b.empty()) return {};
  // solve sum x_i a_i = sum y_j b_j
  QMatrix m(n, static_cast<int>(a.size() + b.size()));
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = a[j][i];
  for (int j = 0; j < static_cast<int>(b.size()); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(a.size()) + j) = -b[j][i];
  std::vector<QVec> out;
  IncrementalBasis basis(n);
  for (const auto& k : kernel(m)) {
    QVec v(n);
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
      if (k[j] != 0)
        for (int i = 0; i < n; ++i) v[i] += k[j] * a[j][i];
    if (basis.insert(v)) out.push_back(v);
  }
  return out;
}

int intersection_dim(const std::vector<std::vector<QVec>>& spans, int n) {
  if (spans.empty()) return n;
  std::vector<QVec> cur = spans[0];
  for (size_t i = 1; i < spans.size(); ++i) cur = intersect_spans(cur, spans[i], n);
  IncrementalBasis b(n);
  int r = 0;
  for (const auto& v : cur)
    if (b.insert(v)) ++r;
  return r;
}

std::vector<QVec> ideal_span(const QuotientAlgebra& A, const std::vector<MultiPoly>& gens) {
  const int N = A.dim();
  IncrementalBasis basis(N);
  std::vector<QVec> out;
  for (const auto& g : gens) {
    QMatrix m = A.mult_matrix(g);
    for (int j = 0; j < N; ++j) {
      QVec col(N);
      for (int i = 0; i < N; ++i) col[i] = m(i, j);
      if (basis.insert(col)) out.push_back(col);
    }
    if (basis.size() == N) break;
  }
  return out;
}

LinearFormEvaluator::LinearFormEvaluator(const QuotientAlgebra& A, const std::vector<std::vector<QVec>>& L,
                                         RingPtr vring)
    : A_(A), vring_(std::move(vring)) {
  nv_ = static_cast<int>(L.size());
  ny_ = nv_ ? static_cast<int>(L[0].size()) : 0;
  if (nv_ != vring_->size()) throw MathError("DimensionMismatch", "one linear form per variable expected");
  for (const auto& row : L) {
    std::vector<QMatrix> mr;
    for (const auto& e : row) mr.push_back(A_.mult_matrix(A_.element(e)));
    M_.push_back(std::move(mr));
  }
  cur_.push_back({Mono{}, Vals{{Mono{}, A_.one()}}});
}

void LinearFormEvaluator::advance() {
  std::vector<std::pair<Mono, Vals>> next;
  for (const auto& [m, vals] : cur_) {
    int last = 0;
    for (int i = 0; i < nv_; ++i)
      if (m.e[i]) last = i;
    // each monomial of the next degree arises once: append variables >= the last used
    for (int i = last; i < nv_; ++i) {
      Vals nv;
      for (const auto& [beta, a] : vals)
        for (int j = 0; j < ny_; ++j) {
          QVec prod = M_[i][j] * a;
          bool zero = true;
          for (const auto& x : prod)
            if (x != 0) zero = false;
          if (zero) continue;
          Mono nb = beta * Mono::var(j);
          auto it = nv.find(nb);
          if (it == nv.end()) {
            nv.emplace(nb, std::move(prod));
          } else {
            for (size_t t = 0; t < prod.size(); ++t) it->second[t] += prod[t];
          }
        }
      next.push_back({m * Mono::var(i), std::move(nv)});
    }
  }
  cur_ = std::move(next);
  ++degree_;
}

namespace {

// Row space over Z/p, p = 2^61 - 1. Ranks mod p never exceed ranks over Q.
class ModpBasis {
 public:
  static constexpr uint64_t kP = (uint64_t(1) << 61) - 1;
  static uint64_t mul(uint64_t a, uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(r & kP), hi = static_cast<uint64_t>(r >> 61);
    uint64_t s = lo + hi;
    return s >= kP ? s - kP : s;
  }
  static uint64_t pw(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  static uint64_t reduce(const Rat& q) {
    Int num = q.get_num() % Int(static_cast<unsigned long>(kP));
    if (num < 0) num += static_cast<unsigned long>(kP);
    Int den = q.get_den() % Int(static_cast<unsigned long>(kP));
    if (den == 0) throw MathError("BadPrime", "denominator divisible by the modulus");
    return mul(num.get_ui(), pw(den.get_ui(), kP - 2));
  }

  explicit ModpBasis(int dim) : dim_(dim) {}
  bool insert(std::vector<uint64_t> v) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const uint64_t f = v[piv_[i]];
      if (!f) continue;
      const uint64_t nf = kP - f;
      const auto& r = rows_[i];
      for (int j = 0; j < dim_; ++j)
        if (r[j]) {
          uint64_t t = v[j] + mul(nf, r[j]);
          v[j] = t >= kP ? t - kP : t;
        }
    }
    int p = 0;
    while (p < dim_ && !v[p]) ++p;
    if (p == dim_) return false;
    const uint64_t inv = pw(v[p], kP - 2);
    for (auto& x : v) x = mul(x, inv);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<int> piv_;
};

}  // namespace

QMatrix LinearFormEvaluator::matrix(int d) {
  if (d < degree_) {
    cur_.assign(1, {Mono{}, Vals{{Mono{}, A_.one()}}});
    degree_ = 0;
  }
  while (degree_ < d) advance();
  const int N = A_.dim();
  std::map<Mono, int> rowbase;
  for (const auto& [m, vals] : cur_)
    for (const auto& [beta, a] : vals) rowbase.emplace(beta, 0);
  int r = 0;
  for (auto& [beta, base] : rowbase) {
    base = r;
    r += N;
  }
  const int ncols = static_cast<int>(cur_.size());
  QMatrix mat(std::max(r, 1), ncols);
  for (int c = 0; c < ncols; ++c)
    for (const auto& [beta, a] : cur_[c].second) {
      int b = rowbase[beta];
      for (int t = 0; t < N; ++t) mat(b + t, c) = a[t];
    }
  return mat;
}

int LinearFormEvaluator::columns(int d) {
  if (d != degree_) matrix(d);
  return static_cast<int>(cur_.size());
}

std::vector<MultiPoly> LinearFormEvaluator::kernel(int d, int* rank_out) {
  const QMatrix mat = matrix(d);
  const int ncols = mat.cols();
  auto ker = ratcurve::kernel(mat);
  if (rank_out) *rank_out = ncols - static_cast<int>(ker.size());
  std::vector<MultiPoly> out;
  for (const auto& k : ker) {
    std::vector<MultiPoly::Term> terms;
    for (int c = 0; c < ncols; ++c)
      if (k[c] != 0) terms.emplace_back(cur_[c].first, k[c]);
    out.push_back(MultiPoly::from_terms(vring_, std::move(terms)).primitive());
  }
  return out;
}

int LinearFormEvaluator::rank_modp(int d) {
  const QMatrix mat = matrix(d);
  ModpBasis b(mat.cols());
  for (int i = 0; i < mat.rows(); ++i) {
    std::vector<uint64_t> row(mat.cols());
    for (int j = 0; j < mat.cols(); ++j)
      if (mat(i, j) != 0) row[j] = ModpBasis::reduce(mat(i, j));
    b.insert(std::move(row));
  }
  return b.size();
}

namespace {

// Degree-d span of the ideal generated by `gens` (all of degree <= d), mod p.
class DegreeSpan {
 public:
  DegreeSpan(const RingPtr& r, int d) : ring_(r), d_(d) {
    enumerate(Mono{}, 0, d_, monos_);
    for (size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = static_cast<int>(i);
    basis_ = std::make_unique<ModpBasis>(static_cast<int>(monos_.size()));
  }
  bool insert(const MultiPoly& p) {
    std::vector<uint64_t> v(monos_.size());
    for (const auto& [m, c] : p.terms()) v[index_.at(m)] = ModpBasis::reduce(c);
    return basis_->insert(std::move(v));
  }
  void add_generator(const MultiPoly& g) {
    std::vector<Mono> mult;
    enumerate(Mono{}, 0, d_ - g.total_degree(), mult);
    for (const auto& m : mult) insert(g * MultiPoly::monomial(ring_, m));
  }
  int dim() const { return basis_->size(); }

 private:
  void enumerate(Mono m, int var, int rem, std::vector<Mono>& out) {
    const int n = ring_->size();
    if (var == n - 1) {
      out.push_back(rem ? m * Mono::var(var, rem) : m);
      return;
    }
    for (int e = rem; e >= 0; --e) enumerate(e ? m * Mono::var(var, e) : m, var + 1, rem - e, out);
  }
  RingPtr ring_;
  int d_;
  std::vector<Mono> monos_;
  std::unordered_map<Mono, int, MonoHash> index_;
  std::unique_ptr<ModpBasis> basis_;
};

}  // namespace

Ideal kernel_ideal(LinearFormEvaluator& ev, KernelStop rule, int max_degree) {
  const RingPtr& r = ev.ring();
  std::vector<MultiPoly> gens;
  int prev_rank = -1;
  int agree = 0;
  for (int d = 1; d <= max_degree; ++d) {
    DegreeSpan span(r, d);
    for (const auto& g : gens) span.add_generator(g);
    const int old_dim = span.dim();
    // rank mod p <= rank over Q, so kernel dim mod p >= kernel dim >= span dim:
    // equality at both ends means the old generators already fill the kernel
    const int cols = ev.columns(d);
    int rk = ev.rank_modp(d);
    const bool filled = old_dim == cols - rk;
    std::vector<MultiPoly> fresh;
    if (!filled) {
      auto ker = ev.kernel(d, &rk);
      for (const auto& k : ker)
        if (span.insert(k)) fresh.push_back(k);
      // the kernel is independent over Q, so a smaller rank mod p means bad reduction
      if (span.dim() != static_cast<int>(ker.size())) throw MathError("BadPrime", "rank dropped modulo p");
    }
    if (rule == KernelStop::Points) {
      for (auto& f : fresh) gens.push_back(std::move(f));
      if (rk == prev_rank) return Ideal(r, gens);
      prev_rank = rk;
    } else {
      if (filled && !gens.empty()) {
        if (++agree >= 2) return Ideal(r, gens);
      } else {
        agree = 0;
      }
      for (auto& f : fresh) gens.push_back(std::move(f));
    }
  }
  throw MathError("DegreeBoundExceeded", "kernel ideal did not stabilize");
}

}  // namespace ratcurve
