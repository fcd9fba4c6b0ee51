#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/monomial.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);
  // Names prefix0..prefix{count-1}.
  static std::shared_ptr<const Ring> indexed(const std::string& prefix, int count);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;  // -1 if absent
  bool operator==(const Ring& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};
using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

// Sparse polynomial over Q. Terms are kept sorted in descending grevlex order
// with nonzero coefficients and unique exponent vectors.
class MultiPoly {
 public:
  using Term = std::pair<Mono, Rat>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static MultiPoly constant(RingPtr ring, const Rat& c);
  static MultiPoly variable(RingPtr ring, int i);
  static MultiPoly variable(RingPtr ring, const std::string& name);
  static MultiPoly monomial(RingPtr ring, const Mono& m, const Rat& c = 1);
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_ ? ring_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  bool is_homogeneous() const;
  Rat coefficient(const Mono& m) const;
  Rat constant_term() const { return coefficient(Mono{}); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Throws InexactDivision when d does not divide *this.
  MultiPoly exact_divide(const MultiPoly& d) const;

  // Leading term with respect to an order.
  const Term& leading_term(const MonomialOrder& ord) const;
  MultiPoly monic(const MonomialOrder& ord) const;
  // Integer coefficients with content 1 and positive grevlex-leading coefficient.
  MultiPoly primitive() const;

  Rat evaluate(const std::vector<Rat>& point) const;
  // Replaces variable i by images[i]; all images share one target ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly derivative(int var) const;
  // Re-expresses the polynomial in a ring containing all used variable names.
  MultiPoly in_ring(const RingPtr& target) const;
  MultiPoly homogenize(int var) const;  // total degree homogenization with var
  MultiPoly homogeneous_part(int d) const;

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Degree-wise linear interreduction of homogeneous generators: returns a basis
// of the span of each graded piece (reduced row echelon form), nonzero only.
std::vector<MultiPoly> interreduce_linear(const std::vector<MultiPoly>& gens);

}  // namespace ratcurve
