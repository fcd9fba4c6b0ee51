#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ratcurve/groebner.hpp"
#include "ratcurve/hilbert.hpp"
#include "ratcurve/mpcomplex.hpp"
#include "ratcurve/multipoly.hpp"
#include "ratcurve/roots.hpp"

namespace ratcurve {

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> gens);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }
  bool is_homogeneous() const;

  // Reduced Groebner basis for ord, computed once and cached.
  const std::vector<MultiPoly>& gb(const MonomialOrder& ord = MonomialOrder::grevlex()) const;
  bool is_unit() const;
  bool is_zero() const;
  bool contains(const MultiPoly& p) const;
  bool contains(const Ideal& j) const;  // j is a subset of *this
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  Ideal operator+(const Ideal& o) const;
  Ideal operator+(const MultiPoly& p) const;
  Ideal operator*(const Ideal& o) const;
  // Same generators re-expressed in another ring (by variable name).
  Ideal in_ring(const RingPtr& target) const;
  // Reduced grevlex basis with integer primitive generators, sorted.
  std::string to_string() const;
  std::vector<MultiPoly> canonical_generators() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<MultiPoly>> bases;
  };
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Point of P^k: exact rational coordinates, or an algebraic point given by a
// root theta of a squarefree polynomial and coordinate polynomials in theta.
// Coordinates are normalized so the first nonzero one equals 1.
struct PointPk {
  bool exact = false;
  std::vector<Rat> q;           // exact coordinates
  std::vector<Complex> z;       // numeric coordinates (always filled)
  UPoly theta_poly;             // algebraic case: squarefree polynomial of theta
  std::vector<UPoly> coord_polys;
  CRoot theta;

  static PointPk from_rational(std::vector<Rat> coords);
  int size() const { return static_cast<int>(z.size()); }
  bool is_real() const;
  std::string to_string(int digits = 12) const;
};

// Fubini-Study style distance between unit-normalized representatives.
Real projective_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

std::vector<MultiPoly> groebner_basis(const Ideal& I, const MonomialOrder& ord);
MultiPoly normal_form(const MultiPoly& p, const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex());

// I intersected with the subring of the variables not in `front`; the result
// lives in the ring of the remaining variables (in their original order).
Ideal eliminate(const Ideal& I, const std::vector<int>& front);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& front);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const MultiPoly& g);
Ideal colon(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const MultiPoly& g);
Ideal saturate(const Ideal& I, const Ideal& J);

// Hilbert data from the grevlex initial ideal (homogeneous ideals).
HilbertData hilbert(const Ideal& I);
// Constant of the Hilbert polynomial of a homogeneous ideal with finite zero set.
int projective_degree(const Ideal& I);
bool is_irrelevant(const Ideal& I);

// Radical of a homogeneous ideal with finite projective zero set (saturated result).
Ideal radical_zero_dim(const Ideal& I);
// All points of V(I) for I radical, homogeneous, zero-dimensional.
std::vector<PointPk> solve_points(const Ideal& I, int precision_bits = kDefaultPrecisionBits);

// Points of V(I) grouped by the length of the local component of the scheme.
struct LengthClass {
  int length = 0;
  Ideal support;  // radical ideal of the points in this class
  std::vector<PointPk> points;
};
std::vector<LengthClass> length_classes(const Ideal& I, int precision_bits = kDefaultPrecisionBits);

int local_length(const Ideal& I, const PointPk& P);
bool curvilinear_check(const Ideal& I, const PointPk& P);

// Ideal of an exact point of P^k (linear generators).
Ideal point_ideal(const RingPtr& ring, const std::vector<Rat>& coords);

}  // namespace ratcurve
