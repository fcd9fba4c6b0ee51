#include <algorithm>

#include "curves.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ratcurve/numeric.hpp"

using namespace ratcurve;
using namespace th;

namespace {

bool has_root(const DivisorP1& d, const Rat& u) {
  for (const auto& e : d.entries)
    if (!e.point.infinity && e.point.u.exact && e.point.u.q == u) return true;
  return false;
}

const PreimageGroup* group_at(const std::vector<PreimageGroup>& gs, std::vector<Rat> q) {
  for (const auto& g : gs)
    if (g.image.exact && g.image.q == q) return &g;
  return nullptr;
}

bool near(const PointPk& p, std::vector<double> want, double tol) {
  std::vector<Complex> w;
  for (double x : want) w.emplace_back(Real(x));
  return to_double(projective_distance(p.z, w)) < tol;
}

}  // namespace

TEST_CASE("roots of F_3 of the sextic") {
  BinaryForm F3 = B("-s^8*t + 5*s^7*t^2 + 29/4*s^6*t^3 - 217/4*s^5*t^4 + 65/4*s^4*t^5 + 341/4*s^3*t^6 - "
                    "9/2*s^2*t^7 - 18*s*t^8");
  DivisorP1 d = complex_roots(F3);
  CHECK(d.entries.size() == 9);
  for (const auto& e : d.entries) CHECK(e.multiplicity == 1);
  int inf = 0;
  for (const auto& e : d.entries) inf += e.point.infinity;
  CHECK(inf == 1);
  for (Rat u : {Rat(-1), Rat(1, 3), Rat(0), Rat(1, 4), Rat(-1, 3), Rat(1, 2), Rat(2), Rat(-2)}) CHECK(has_root(d, u));
}

TEST_CASE("roots with multiplicity") {
  DivisorP1 d = complex_roots(B("-s^12 - s^8*t^4 - s^4*t^8"));
  CHECK(d.total_multiplicity() == 12);
  int simple = 0;
  bool inf4 = false, pi6 = false;
  PrecisionGuard g(kDefaultPrecisionBits);
  for (const auto& e : d.entries) {
    if (e.point.infinity) inf4 = e.multiplicity == 4;
    if (e.multiplicity == 1) ++simple;
    // (e^{i pi/6} : 1) is (1 : e^{-i pi/6})
    if (!e.point.infinity && std::abs(to_double(e.point.u.z.re) - std::sqrt(3.0) / 2) < 1e-12 &&
        std::abs(to_double(e.point.u.z.im) + 0.5) < 1e-12)
      pi6 = true;
  }
  CHECK(inf4);
  CHECK(simple == 8);
  CHECK(pi6);
  DivisorP1 q = complex_roots(B("s^2 + t^2"));
  REQUIRE(q.entries.size() == 2);
  for (const auto& e : q.entries) {
    CHECK_FALSE(e.point.u.real);
    CHECK(std::abs(std::abs(to_double(e.point.u.z.im)) - 1) < 1e-12);
  }
}

TEST_CASE("grouping preimages of the sextic triple points") {
  CurveParam c = sextic();
  BinaryForm F3 = B("-s^8*t + 5*s^7*t^2 + 29/4*s^6*t^3 - 217/4*s^5*t^4 + 65/4*s^4*t^5 + 341/4*s^3*t^6 - "
                    "9/2*s^2*t^7 - 18*s*t^8");
  auto gs = group_preimages(c, complex_roots(F3), 1e-8);
  REQUIRE(gs.size() == 3);
  const auto* a = group_at(gs, {0, 1, 0});
  const auto* b = group_at(gs, {1, 0, 0});
  const auto* z = group_at(gs, {0, 0, 1});
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(z);
  CHECK(a->total_multiplicity() == 3);
  bool inf = false;
  for (const auto& e : a->preimages) inf |= e.point.infinity;
  CHECK(inf);
  std::vector<Rat> bu;
  for (const auto& e : b->preimages) bu.push_back(e.point.u.q);
  std::sort(bu.begin(), bu.end());
  CHECK(bu == std::vector<Rat>{Rat(-1, 3), 0, Rat(1, 4)});
  std::vector<Rat> zu;
  for (const auto& e : z->preimages) zu.push_back(e.point.u.q);
  std::sort(zu.begin(), zu.end());
  CHECK(zu == std::vector<Rat>{-2, Rat(1, 2), 2});
}

TEST_CASE("the level-2 residue of the sextic maps to one node") {
  auto gs = group_preimages(sextic(), complex_roots(B("s^2 - 1527/713*s*t - 8704/713*t^2")), 1e-8);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].total_multiplicity() == 2);
  CHECK(near(gs[0].image, {1, 0.12004, 0.023278}, 1e-4));
}

TEST_CASE("grouping the nodal quartic") {
  CurveParam c = nodal_quartic();
  auto gs = group_preimages(c, complex_roots(B("-s^6 + s^4*t^2 - s^2*t^4 + t^6")), 1e-8);
  REQUIRE(gs.size() == 3);
  const auto* g = group_at(gs, {1, 0, 1});
  REQUIRE(g);
  std::vector<Rat> u;
  for (const auto& e : g->preimages) u.push_back(e.point.u.q);
  std::sort(u.begin(), u.end());
  CHECK(u == std::vector<Rat>{-1, 1});
  int numeric = 0;
  for (const auto& x : gs)
    if (!x.image.exact) {
      ++numeric;
      CHECK((near(x.image, {1, std::sqrt(2.0), -1}, 1e-12) || near(x.image, {1, -std::sqrt(2.0), -1}, 1e-12)));
    }
  CHECK(numeric == 2);
}

TEST_CASE("a tolerance below the working precision is ambiguous") {
  CurveParam c = nodal_quartic();
  DivisorP1 d = complex_roots(B("-s^6 + s^4*t^2 - s^2*t^4 + t^6"), 53);
  CHECK_THROWS_WITH_AS(group_preimages(c, d, 1e-26, 53), doctest::Contains("AmbiguousCluster"), MathError);
}

TEST_CASE("near-coincident nodes of the comparison quartic") {
  CurveParam c = near_quartic();
  auto gs = group_preimages(c, complex_roots(B("-s*t*(s^4 - 2868/37*s^3*t - 16656/37*s^2*t^2 + 2868/37*s*t^3 + t^4)")), 1e-8);
  REQUIRE(gs.size() == 3);
  CHECK(group_at(gs, {1, 1, 1}));
  int found = 0;
  for (const auto& g : gs) {
    CHECK(g.total_multiplicity() == 2);
    if (near(g.image, {0.881, 1.821, 1}, 1e-3)) ++found;
    if (near(g.image, {0.333, 0.689, 1}, 1e-3)) ++found;
  }
  CHECK(found == 2);
}

TEST_CASE("image points") {
  CurveParam c = acnode_cubic();
  P1Point inf;
  inf.infinity = true;
  PointPk p = image_point(c, inf);
  CHECK(p.exact);
  CHECK(p.q == std::vector<Rat>{1, 0, -1});
}

TEST_CASE("real mode") {
  auto a = real_mode(acnode_cubic());
  REQUIRE(a.size() == 1);
  CHECK(a[0].cls == RealClass::Acnode);
  CHECK(a[0].point.q == std::vector<Rat>{0, 0, 1});
  CHECK(a[0].conjugation_ok);

  auto h = real_mode(hidden_quartic());
  REQUIRE(h.size() == 1);
  CHECK(h[0].cls == RealClass::Hidden);
  CHECK(h[0].point.q == std::vector<Rat>{0, 0, 1});
  CHECK(h[0].real_preimages == 1);
  CHECK(h[0].nonreal_preimages == 2);

  auto q = real_mode(a4_quintic());
  REQUIRE(q.size() == 5);
  int acnodes = 0, nonreal = 0, oncurve = 0;
  for (const auto& r : q) {
    if (r.cls == RealClass::Acnode) {
      ++acnodes;
      CHECK(r.point.exact);
      CHECK((r.point.q == std::vector<Rat>{1, 1, 0} || r.point.q == std::vector<Rat>{1, -1, -2}));
    }
    if (r.cls == RealClass::NonReal) ++nonreal;
    if (r.cls == RealClass::RealOnCurve) {
      ++oncurve;
      CHECK(r.point.q == std::vector<Rat>{0, 0, 1});
    }
  }
  CHECK(acnodes == 2);
  CHECK(nonreal == 2);
  CHECK(oncurve == 1);
}

TEST_CASE("root isolation stops at the rounding level") {
  // F_2 of this sextic is ill-conditioned enough that step sizes never drop below the tolerance
  CurveParam c = parse_curve("9*s^6 - 4*s^5*t + 9*s^4*t^2 - 5*s^3*t^3 - 7*s^2*t^4 + 3*s*t^5 + 5*t^6",
                             "8*s^6 - 3*s^5*t + 7*s^4*t^2 + 6*s^3*t^3 + 5*s^2*t^4 + 6*s*t^5",
                             "3*s^6 - 7*s^5*t + s^4*t^2 + 6*s^3*t^3 + 4*s^2*t^4 - s*t^5 - 8*t^6");
  Pipeline p(c);
  DivisorP1 d = complex_roots(p.preimages().F.at(2));
  CHECK(d.total_multiplicity() == 20);
  CHECK(p.points().size() == 10);
}
