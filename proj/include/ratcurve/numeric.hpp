#pragma once

#include <vector>

#include "ratcurve/curve.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/roots.hpp"

namespace ratcurve {

struct PreimageGroup {
  PointPk image;  // exact when every preimage is rational, else numeric
  std::vector<DivisorEntry> preimages;
  int total_multiplicity() const;
};

// Images of the divisor points under the curve, clustered by exact equality
// (both exact) or projective distance below tol. The clustering is repeated
// at twice the precision; a different grouping throws AmbiguousCluster.
std::vector<PreimageGroup> group_preimages(const CurveParam& c, const DivisorP1& d, double tol,
                                           int precision_bits = kDefaultPrecisionBits);

struct RealPoint {
  PointPk point;
  RealClass cls = RealClass::NonReal;
  int real_preimages = 0, nonreal_preimages = 0;
  bool conjugation_ok = true;  // non-real preimages come in conjugate pairs
};

// Reality class of one singular point from its preimages.
RealPoint classify_real(const SingularPoint& p);
std::vector<RealPoint> real_mode(const CurveParam& c);
std::vector<RealPoint> real_mode(Pipeline& p);

// The image of (s:t) under the curve: exact when s, t are rational.
PointPk image_point(const CurveParam& c, const P1Point& p);

}  // namespace ratcurve
