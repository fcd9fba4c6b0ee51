#include "doctest.h"
#include "helpers.hpp"
#include "ratcurve/groebner.hpp"
#include "ratcurve/zerodim.hpp"

using namespace ratcurve;
using namespace th;

namespace {
bool near(const std::vector<Complex>& a, std::vector<double> b, double tol = 1e-9) {
  std::vector<Complex> bb;
  for (double v : b) bb.emplace_back(Real(v));
  return projective_distance(a, bb) < tol;
}
}  // namespace

TEST_CASE("groebner basis and normal forms") {
  auto r = Ring::make({"x", "y", "z"});
  Ideal J = I(r, {"x^2+y*z", "x*y-z^2", "y^3-x*z"});
  auto G = J.gb();
  CHECK(is_groebner(G, MonomialOrder::grevlex()));
  CHECK(J.contains(P("(x^2+y*z)*(x+y) + (x*y-z^2)*z^3", r)));
  CHECK_FALSE(J.contains(P("x", r)));
  auto L = J.gb(MonomialOrder::lex());
  CHECK(is_groebner(L, MonomialOrder::lex()));
  CHECK(Ideal(r, L) == J);
  CHECK(I(r, {"x", "x+1"}).is_unit());
}

TEST_CASE("elimination") {
  auto r = Ring::make({"a", "b", "x0", "x1", "x2"});
  Ideal J = I(r, {"x0-a^2", "x1-2*a*b", "x2-b^2"});
  Ideal E = eliminate(J, std::vector<std::string>{"a", "b"});
  REQUIRE(E.gb().size() == 1);
  auto x = E.ring();
  CHECK(E == I(x, {"x1^2-4*x0*x2"}));
}

TEST_CASE("colon, saturation, intersection") {
  auto r = Ring::make({"x", "y"});
  CHECK(saturate(I(r, {"x^2*y"}), P("x", r)) == I(r, {"y"}));
  CHECK(colon(I(r, {"x*y"}), P("x", r)) == I(r, {"y"}));
  CHECK(intersect(I(r, {"x"}), I(r, {"y"})) == I(r, {"x*y"}));
  CHECK(saturate(I(r, {"x^2*y", "x*y^2"}), I(r, {"x", "y"})) == I(r, {"x*y"}));
  CHECK(saturate(I(r, {"x^2", "x*y"}), I(r, {"x", "y"})) == I(r, {"x"}));
}

TEST_CASE("radical of a zero-dimensional scheme") {
  auto r = Ring::indexed("x", 3);
  Ideal J = I(r, {"x1^2", "x0*x1", "x0^2+x1*x2"});
  CHECK(radical_zero_dim(J) == I(r, {"x0", "x1"}));
  CHECK(projective_degree(J) == 3);
}

TEST_CASE("hilbert data") {
  auto r = Ring::indexed("z", 3);
  HilbertData h = hilbert(I(r, {"z0*z2-z1^2"}));
  CHECK(h.krull_dim == 2);
  CHECK(h.degree == 2);
  CHECK(h.value(5) == 11);
  auto x = Ring::indexed("x", 4);
  HilbertData tw = hilbert(I(x, {"x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"}));
  CHECK(tw.krull_dim == 2);
  CHECK(tw.degree == 3);
  CHECK(tw.value(4) == 13);
}

TEST_CASE("solving zero-dimensional systems") {
  auto r = Ring::indexed("x", 3);
  Ideal J = I(r, {"x0*x2-x1*x2", "x1^2", "x0*x1"});
  CHECK(projective_degree(J) == 3);
  auto pts = solve_points(radical_zero_dim(J));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].exact);
  CHECK(pts[1].exact);
  // (x^2-2 z^2, y - z)
  Ideal K = I(r, {"x0^2-2*x2^2", "x1-x2"});
  auto q = solve_points(K);
  REQUIRE(q.size() == 2);
  CHECK_FALSE(q[0].exact);
  CHECK(q[0].is_real());
  CHECK(near(q[0].z, {-1.4142135623730951, 1, 1}, 1e-12));
  CHECK(near(q[1].z, {1.4142135623730951, 1, 1}, 1e-12));
  // nonreal pair plus a rational point
  Ideal Z = intersect(I(r, {"x0^2+x1^2", "x2"}), I(r, {"x0-x1", "x2-3*x1"}));
  auto zp = solve_points(radical_zero_dim(Z));
  REQUIRE(zp.size() == 3);
  int real = 0;
  for (const auto& p : zp) real += p.is_real();
  CHECK(real == 1);
}

TEST_CASE("local lengths and curvilinearity") {
  auto r = Ring::indexed("x", 3);
  for (int m = 2; m <= 4; ++m) {
    std::string xm = "x1^" + std::to_string(m);
    std::string xm1 = "x1^" + std::to_string(m + 1);
    Ideal curv(r, {P("x0", r), P(xm, r)});  // chart x2 = 1: (y, x^m)
    Ideal fat(r, {P(xm1, r), P("x0*x1", r), P("x0^2", r)});
    PointPk o = PointPk::from_rational({0, 0, 1});
    CHECK(local_length(curv, o) == m);
    CHECK(curvilinear_check(curv, o));
    CHECK(local_length(fat, o) == m + 2);
    CHECK_FALSE(curvilinear_check(fat, o));
  }
  Ideal two = intersect(I(r, {"x0", "x1^3"}), I(r, {"x0-x2", "x1-x2"}));
  auto cls = length_classes(two);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].length + cls[1].length == 4);
}

TEST_CASE("chart and quotient algebra") {
  auto r = Ring::indexed("x", 3);
  Ideal J = I(r, {"x0", "x1^2-x1*x2"});
  Chart c = Chart::choose(J);
  Ideal A = c.to_affine(J);
  QuotientAlgebra Q(A);
  CHECK(Q.dim() == 2);
  CHECK(c.to_projective(A) == J);
  CHECK(inverse_mod(UPoly::x(), UPoly::x() * UPoly::x() + UPoly::constant(1)) == -UPoly::x());
}
