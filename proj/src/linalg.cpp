#include "ratcurve/linalg.hpp"

namespace ratcurve {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVec>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw MathError("DimensionMismatch", "matrix product shapes");
  QMatrix r(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

QVec QMatrix::operator*(const QVec& v) const {
  if (static_cast<int>(v.size()) != c_) throw MathError("DimensionMismatch", "matrix-vector shapes");
  QVec r(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Echelon rref(QMatrix m) {
  Echelon e;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    Rat inv = 1 / m(row, c);
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

int rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVec> kernel(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<QVec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (int r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  QVec x(m.cols());
  for (int r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.m(r, m.cols());
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

UPoly charpoly(const QMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw MathError("DimensionMismatch", "charpoly of a non-square matrix");
  QMatrix h = m;
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int r = c + 1; r < n; ++r)
      if (h(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    for (int r = c + 2; r < n; ++r) {
      if (h(r, c) == 0) continue;
      Rat u = h(r, c) / h(c + 1, c);
      for (int j = 0; j < n; ++j)
        if (h(c + 1, j) != 0) h(r, j) -= u * h(c + 1, j);
      for (int i = 0; i < n; ++i)
        if (h(i, r) != 0) h(i, c + 1) += u * h(i, r);
    }
  }
  // recurrence on leading principal minors of the Hessenberg form
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(1);
  for (int k = 1; k <= n; ++k) {
    p[k] = (UPoly::x() - UPoly::constant(h(k - 1, k - 1))) * p[k - 1];
    Rat t = 1;
    for (int i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      Rat coef = t * h(k - i - 1, k - 1);
      if (coef != 0) p[k] = p[k] - p[k - i - 1] * coef;
    }
  }
  return p[n];
}

bool IncrementalBasis::insert(const QVec& v0, QVec* coords) {
  QVec v = v0;
  const int nrows = size();
  QVec alpha(nrows);
  for (int i = 0; i < nrows; ++i) {
    const Rat a = v[piv_[i]];
    if (a == 0) continue;
    alpha[i] = a;
    const QVec& r = rows_[i];
    for (int j = 0; j < dim_; ++j)
      if (r[j] != 0) v[j] -= a * r[j];
  }
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) {
    if (coords) {
      QVec c(nrows);
      for (int i = 0; i < nrows; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < static_cast<int>(combo_[i].size()); ++j) c[j] += alpha[i] * combo_[i][j];
      }
      *coords = std::move(c);
    }
    return false;
  }
  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // combo of the new row: (e_new - sum alpha_i combo_i) * inv
  QVec combo(nrows + 1);
  combo[nrows] = 1;
  for (int i = 0; i < nrows; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < static_cast<int>(combo_[i].size()); ++j) combo[j] -= alpha[i] * combo_[i][j];
  }
  for (auto& x : combo) x *= inv;
  for (auto& c : combo_) c.resize(nrows + 1);
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  combo_.push_back(std::move(combo));
  return true;
}

UPoly krylov_minpoly(const QMatrix& m, const QVec& v) {
  IncrementalBasis basis(m.rows());
  QVec cur = v;
  QVec coords;
  int k = 0;
  while (basis.insert(cur, &coords)) {
    cur = m * cur;
    ++k;
  }
  // m^k v = sum coords_j m^j v
  std::vector<Rat> c(k + 1);
  for (int j = 0; j < k; ++j) c[j] = -coords[j];
  c[k] = 1;
  return UPoly(std::move(c));
}

UPoly minpoly(const QMatrix& m) {
  const int n = m.rows();
  // lcm of Krylov polynomials of the unit vectors
  UPoly acc = UPoly::constant(1);
  for (int i = 0; i < n; ++i) {
    QVec e(n);
    e[i] = 1;
    UPoly q = krylov_minpoly(m, e);
    UPoly g = gcd(acc, q);
    acc = (acc * q).exact_div(g).monic();
  }
  return acc;
}

}  // namespace ratcurve
