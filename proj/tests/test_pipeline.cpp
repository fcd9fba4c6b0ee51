#include <set>

#include "curves.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/zerodim.hpp"

using namespace ratcurve;
using namespace th;

namespace {

Partition Pt(std::vector<int> v) { return Partition::make(std::move(v)); }

std::multiset<int> a_types(const std::vector<SingularPoint>& pts) {
  std::multiset<int> s;
  for (const auto& p : pts)
    if (p.a_index) s.insert(*p.a_index);
  return s;
}

bool has_point(const std::vector<SingularPoint>& pts, std::vector<Rat> q) {
  for (const auto& p : pts)
    if (p.coords.exact && p.coords.q == q) return true;
  return false;
}

}  // namespace

TEST_CASE("counts") {
  CountResult s = count_singularities(sextic());
  CHECK(s.N == 4);
  CHECK(s.N_k[3] == 3);
  CHECK(s.N_k[2] == 1);
  CHECK(s.top == 3);
  CountResult t = count_singularities(triple_quartic());
  CHECK(t.N_k[3] == 1);
  CHECK(t.N_k[2] == 0);
  CountResult q = count_singularities(nodal_quartic());
  CHECK(q.N_k[2] == 3);
  CHECK(q.N == 3);
}

TEST_CASE("branch structure") {
  StratumTable b = branch_structure(two_branch_quintic());
  CHECK(b[4][Pt({2, 2})] == 1);
  int total = 0;
  for (const auto& [k, m] : b)
    for (const auto& [l, v] : m) total += v;
  CHECK(total == 1);
  StratumTable s = branch_structure(sextic());
  CHECK(s[3][Pt({1, 1, 1})] == 3);
  CHECK(s[2][Pt({1, 1})] == 1);
  StratumTable e = branch_structure(e6_quartic());
  CHECK(e[2][Pt({2})] == 1);
  CHECK(e[2][Pt({1, 1})] == 0);
}

TEST_CASE("X_4 of the two-branch quintic is supported at one point") {
  Pipeline p(two_branch_quintic());
  auto pts = solve_points(p.Z(4));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].exact);
  CHECK(pts[0].q == std::vector<Rat>{0, 0, 1, 0, 0});
}

TEST_CASE("cuspidal test") {
  CuspidalResult a = cuspidal_test(cusp_pair_quartic());
  CHECK(a.cuspidal);
  CHECK_FALSE(a.ordinary_only);
  CHECK(a.support_size == 2);
  CuspidalResult b = cuspidal_test(e6_quartic());
  CHECK(b.cuspidal);
  CHECK(b.support_size == 1);
  CuspidalResult c = cuspidal_test(sextic());
  CHECK(c.ordinary_only);
  CHECK_FALSE(c.cuspidal);
  CuspidalResult d = cuspidal_test(cusps_node_quartic());
  CHECK_FALSE(d.cuspidal);
  CHECK_FALSE(d.ordinary_only);
}

TEST_CASE("singular ideals") {
  IdealsResult a = singular_ideals(cusps_node_quartic());
  RingPtr w = a.J_N.ring();
  CHECK(a.J_N == I(w, {"w1^2+w1*w2", "w0*w1-w1*w2", "w0*w2+w1*w2"}));
  auto pts = solve_points(a.J_N);
  CHECK(pts.size() == 3);
  IdealsResult b = singular_ideals(nodal_quartic());
  CHECK(b.J_N == I(b.J_N.ring(), {"w1^2+w0*w2-w2^2", "w0*w1+w1*w2", "w0^2-w2^2"}));
  IdealsResult s = singular_ideals(sextic());
  CHECK(projective_degree(s.J_N) == 4);
  CHECK(s.N_k[3] == 3);
  CHECK(projective_degree(s.J[2]) == 1);
}

TEST_CASE("preimage forms") {
  PreimageResult s = preimage_forms(sextic());
  CHECK(s.F[3].associate_of(B("-s^8*t + 5*s^7*t^2 + 29/4*s^6*t^3 - 217/4*s^5*t^4 + 65/4*s^4*t^5 + 341/4*s^3*t^6 - "
                              "9/2*s^2*t^7 - 18*s*t^8")));
  CHECK(s.fresh[2].associate_of(B("s^2 - 1527/713*s*t - 8704/713*t^2")));
  CHECK(s.F[2].associate_of(
      B("-s^10*t + 5092/713*s^9*t^2 + 24953/2852*s^8*t^3 - 93271/713*s^7*t^4 + 31322/713*s^6*t^5 + "
        "1016323/1426*s^5*t^6 - 1099301/2852*s^4*t^7 - 1495957/1426*s^3*t^8 + 2898/31*s^2*t^9 + 156672/713*s*t^10")));
  CHECK(s.divisibility_failures.empty());
  PreimageResult q = preimage_forms(nodal_quartic());
  CHECK(q.F[2].associate_of(B("-s^6 + s^4*t^2 - s^2*t^4 + t^6")));
  PreimageResult c = preimage_forms(cusps_node_quartic());
  CHECK(c.F[2].associate_of(B("s^4*t^2 + s^3*t^3 + s^2*t^4")));
}

TEST_CASE("singular points of the sextic") {
  Pipeline p(sextic());
  const auto& pts = p.points();
  REQUIRE(pts.size() == 4);
  CHECK(has_point(pts, {0, 1, 0}));
  CHECK(has_point(pts, {1, 0, 0}));
  CHECK(has_point(pts, {0, 0, 1}));
  CHECK(pts[3].multiplicity == 2);
  CHECK(pts[3].coords.exact);
  CHECK(std::abs(to_double(pts[3].coords.z[1].re) - 0.12) < 0.005);
  CHECK(std::abs(to_double(pts[3].coords.z[2].re) - 0.023) < 0.001);
}

TEST_CASE("A_s classification") {
  CHECK(a_types(classify_double_points(tacnode_quartic())) == std::multiset<int>{1, 3});
  CHECK(a_types(classify_double_points(a4_quintic())) == std::multiset<int>{1, 1, 1, 1, 4});
  CHECK(a_types(classify_double_points(cusp_pair_quartic())) == std::multiset<int>{2, 4});
  CHECK(a_types(classify_double_points(e6_quartic())) == std::multiset<int>{6});
  for (const auto& sp : classify_double_points(tacnode_quartic())) {
    CHECK_FALSE(sp.a_inconclusive);
    CHECK(sp.a_verification == "verified");
  }
}

TEST_CASE("septic with an A_6 cusp") {
  Pipeline p(a6_septic());
  CHECK(projective_degree(p.X(2)) == 15);
  CHECK(projective_degree(p.Z(2)) == 13);
  CHECK(colon_chain_degrees(p.X(2), conic_poly(p.X(2).ring()), 5) == std::vector<int>{15, 14, 13, 12, 12});
  std::multiset<int> want{6};
  for (int i = 0; i < 12; ++i) want.insert(1);
  CHECK(a_types(p.classified()) == want);
  const Algorithm4Result& a4 = p.algorithm4();
  CHECK(a4.ran);
  CHECK(a4.degree_ok);
  CHECK(a4.tested == 13);
  CHECK(a4.passed == 13);
}

TEST_CASE("algorithm 4 preimage form of the A_4 quintic") {
  Pipeline p(a4_quintic());
  const Algorithm4Result& a4 = p.algorithm4();
  CHECK(a4.F.associate_of(B("-s^12 - s^8*t^4 - s^4*t^8")));
  Pipeline m(sextic());
  CHECK_FALSE(m.algorithm4().ran);
}

TEST_CASE("clebsch") {
  CHECK(clebsch_check(count_singularities(sextic()).N_k, 6));
  CHECK_FALSE(clebsch_check(count_singularities(a4_quintic()).N_k, 5));
  CHECK(clebsch_check(count_singularities(acnode_cubic()).N_k, 3));
}

TEST_CASE("delta") {
  auto d = delta_map(a6_septic());
  int total = 0, threes = 0;
  for (const auto& [pt, v] : d) {
    total += v;
    threes += v == 3;
  }
  CHECK(total == 15);
  CHECK(threes == 1);
  for (const auto& [pt, v] : delta_map(nodal_quartic())) CHECK(v == 1);
  auto e = delta_map(e6_quartic());
  REQUIRE(e.size() == 1);
  CHECK(e[0].second == 3);
  Pipeline s(sextic());
  for (const auto& sp : s.classified()) CHECK(sp.delta_heuristic == (sp.multiplicity >= 3));
}

TEST_CASE("improper input is rejected") {
  CHECK_THROWS_WITH_AS(count_singularities(parse_curve("s^4", "s^2*t^2", "t^4")), doctest::Contains("NotProper"),
                       MathError);
}
