#pragma once

#include <optional>
#include <vector>

#include "ratcurve/rational.hpp"
#include "ratcurve/upoly.hpp"

namespace ratcurve {

using QVec = std::vector<Rat>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static QMatrix identity(int n);
  static QMatrix from_columns(const std::vector<QVec>& cols, int rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QVec operator*(const QVec& v) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

struct Echelon {
  QMatrix m;                // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(QMatrix m);
int rank(const QMatrix& m);
// Basis of {x : m x = 0}.
std::vector<QVec> kernel(const QMatrix& m);
std::optional<QVec> solve(const QMatrix& m, const QVec& b);
std::optional<QMatrix> inverse(const QMatrix& m);

// Characteristic polynomial det(u I - m), monic.
UPoly charpoly(const QMatrix& m);
// Monic polynomial p of least degree with p(m) v = 0.
UPoly krylov_minpoly(const QMatrix& m, const QVec& v);
// Minimal polynomial of m.
UPoly minpoly(const QMatrix& m);

// Incrementally maintained row space used to detect linear dependencies.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(int dim) : dim_(dim) {}
  // Reduces v against the basis; if independent, inserts and returns true.
  // When dependent and `coords` is non-null, fills the combination of previously
  // inserted vectors (in insertion order) that equals v.
  bool insert(const QVec& v, QVec* coords = nullptr);
  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<QVec> rows_;   // reduced vectors
  std::vector<int> piv_;     // pivot column of each row
  std::vector<QVec> combo_;  // expression of rows_[i] in inserted vectors
};

}  // namespace ratcurve
