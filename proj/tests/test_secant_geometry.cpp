#include <filesystem>
#include <fstream>
#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ratcurve/secant.hpp"
#include "ratcurve/strata.hpp"

using namespace ratcurve;
using namespace th;

namespace {

CurveParam random_curve(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  for (;;) {
    std::vector<BinaryForm> f;
    for (int u = 0; u < 3; ++u) {
      std::vector<Rat> c(n + 1);
      for (auto& x : c) x = d(rng);
      f.emplace_back(n, c);
    }
    try {
      if (f[0].is_zero() || f[1].is_zero() || f[2].is_zero()) continue;
      CurveParam cp(f[0], f[1], f[2]);
      check_proper(cp);
      return cp;
    } catch (const MathError&) {
    }
  }
}

Partition Pt(std::vector<int> v, int k = -1) { return Partition::make(std::move(v), k); }

}  // namespace

TEST_CASE("secant matrix shape") {
  CurveParam c = sextic();
  SecantMatrix M = build_Mk(c, 2);
  CHECK(M.rows() == 8);
  CHECK(M.cols() == 7);
  CHECK(M.m[0][0] == P("x0", M.ring));
  CHECK(M.m[4][6] == P("x2", M.ring));
  CHECK(M.m[5][0] == P("4", M.ring));
  SecantMatrix T = build_Mk(c, 5);
  CHECK(T.rows() == 5);
  for (int k = 2; k <= 5; ++k) {
    SecantMatrix B = build_Mk(c, k);
    for (int j = 0; j < B.rows() - 3; ++j) {
      int nz = 0;
      for (const auto& e : B.m[j]) nz += !e.is_zero();
      CHECK(nz == k + 1);
    }
  }
  CHECK_THROWS_WITH_AS(build_Mk(c, 6), doctest::Contains("KOutOfRange"), MathError);
  CHECK_THROWS_WITH_AS(build_Mk(c, 1), doctest::Contains("KOutOfRange"), MathError);
}

TEST_CASE("X_k ideals") {
  CurveParam q = cusp_pair_quartic();
  Ideal X2 = ideal_Xk(q, 2);
  CHECK(X2 == I(X2.ring(), {"x0*x2-x1*x2", "x1^2", "x0*x1"}));
  CHECK(projective_degree(X2) == 3);
  Ideal X3 = ideal_Xk(triple_quartic(), 3);
  CHECK(X3 == I(X3.ring(), {"x3", "x2", "x0"}));
  for (int k = 2; k <= 5; ++k) CHECK(Int(static_cast<long>(minors_Xk(sextic(), k).size())) == minor_count(6, k));
  CHECK(minor_count(6, 2) == 8);
  CHECK(minor_count(6, 3) == 49);
}

TEST_CASE("X_2 of the sextic") {
  Ideal X2 = ideal_Xk(sextic(), 2);
  CHECK(projective_degree(X2) == 10);
  CHECK(radical_zero_dim(X2) == X2);
  Ideal X3 = ideal_Xk(sextic(), 3);
  CHECK(projective_degree(X3) == 3);
  CHECK(is_irrelevant(ideal_Xk(sextic(), 4)));
}

TEST_CASE("length of X_2 on random curves") {
  std::mt19937 rng(7);
  for (int n = 3; n <= 7; ++n)
    for (int rep = 0; rep < 2; ++rep) {
      CurveParam c = random_curve(rng, n);
      CHECK(projective_degree(ideal_Xk(c, 2)) == (n - 1) * (n - 2) / 2);
    }
}

TEST_CASE("rational normal curve") {
  Ideal C2 = rnc_ideal(2);
  CHECK(C2 == I(C2.ring(), {"z0*z2-z1^2"}));
  Ideal C6 = rnc_ideal(6);
  CHECK(C6.gens().size() == 15);
  CHECK(hilbert(C6).degree == 6);
  for (const auto& g : C6.gens()) {
    std::vector<Rat> pt;
    for (int p = 0; p <= 6; ++p) pt.push_back(rat_pow(Rat(3), 6 - p) * rat_pow(Rat(-2, 5), p));
    CHECK(g.evaluate(pt) == 0);
  }
}

TEST_CASE("partition order and ancestors") {
  CHECK(preceq(Pt({5, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1}), Pt({5, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(preceq(Pt({5, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}), Pt({5, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1})));
  for (int k = 2; k <= 7; ++k) {
    auto ps = partitions_of(k);
    for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(preceq(ps[0], ps[i]));
    CHECK(preceq(ps[0], ps.back()));
    for (const auto& p : ps) CHECK(preceq(p, p));
  }
  CHECK(ancestor_multiplicity(Pt({3, 3, 1, 1}, 8), Pt({3, 2, 1, 1}, 7)) == 2);
  CHECK(ancestor_multiplicity(Pt({1, 1, 1}), Pt({1, 1})) == 3);
  CHECK(ancestor_multiplicity(Pt({2}), Pt({1})) == 1);
  CHECK(ancestor_multiplicity(Pt({2, 2}), Pt({3})) == 0);
  CHECK_THROWS_WITH_AS(preceq(Pt({2}), Pt({3})), doctest::Contains("SizeMismatch"), MathError);
  CHECK_THROWS_WITH_AS(ancestor_multiplicity(Pt({2}), Pt({2})), doctest::Contains("SizeMismatch"), MathError);
  CHECK(sub_shape_count(Pt({1, 1, 1}), Pt({1, 1})) == 3);
  CHECK(sub_shape_count(Pt({2, 2}), Pt({2})) == 2);
  CHECK(sub_shape_count(Pt({2, 2}), Pt({1, 1})) == 1);
  auto cov = covers_below(Pt({2, 1, 1}));
  REQUIRE(cov.size() == 2);
  CHECK(cov[0] == Pt({3, 1}));
  CHECK(cov[1] == Pt({2, 2}));
}

TEST_CASE("combinatorics against brute force") {
  for (int k = 1; k <= 6; ++k) {
    auto ps = partitions_of(k);
    for (const auto& a : ps)
      for (const auto& b : ps) CHECK(preceq(a, b) == preceq_bruteforce(a, b));
    if (k < 2) continue;
    for (const auto& a : ps)
      for (const auto& s : partitions_of(k - 1))
        CHECK(ancestor_multiplicity(a, s) == ancestor_multiplicity_bruteforce(a, s));
  }
}

TEST_CASE("strata ideals") {
  Ideal conic = rlambda_ideal(2, Pt({2}));
  CHECK(conic == I(conic.ring(), {"x1^2-4*x0*x2"}));
  CHECK(rlambda_ideal(4, Pt({1, 1, 1, 1})).is_zero());
  Ideal tau = rlambda_ideal(3, Pt({2, 1}));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int rep = 0; rep < 20; ++rep) {
    BinaryForm l1(1, {d(rng), d(rng)}), l2(1, {d(rng), d(rng)});
    BinaryForm f = l1 * l1 * l2;
    for (const auto& g : tau.gens()) CHECK(g.evaluate(f.coeffs()) == 0);
  }
  // R_lambda is inside R_mu exactly when lambda <= mu
  for (int k = 2; k <= 5; ++k) {
    auto ps = partitions_of(k);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        bool contained = rlambda_ideal(k, a).contains(rlambda_ideal(k, b));
        CHECK_MESSAGE(contained == preceq(a, b), a.to_string() << " vs " << b.to_string());
      }
  }
  // x0 = 0 is tangent to the conic at (0:0:1)
  CHECK(projective_degree(rlambda_ideal(2, Pt({2})) + P("x0", conic.ring())) == 2);
}

TEST_CASE("stratum disk cache") {
  auto dir = std::filesystem::temp_directory_path() / "ratcurve_cache_test";
  std::filesystem::remove_all(dir);
  std::string saved = stratum_cache_dir();
  set_stratum_cache_dir(dir.string());
  Ideal a = rlambda_ideal(4, Pt({2, 2}));
  set_stratum_cache_dir(saved);
  CHECK(std::filesystem::exists(dir / "k4_l-2-2.txt"));
  std::ifstream in(dir / "k4_l-2-2.txt");
  std::string header;
  std::getline(in, header);
  CHECK(header == "ratcurve-stratum 1");
  CHECK(a == rlambda_ideal(4, Pt({2, 2})));
  std::filesystem::remove_all(dir);
}

TEST_CASE("projection of the rational normal curve") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const CurveParam& c : {sextic(), nodal_quartic(), a6_septic()}) {
    for (int rep = 0; rep < 20; ++rep) {
      Rat s(d(rng)), t(d(rng), 7);
      if (s == 0 && t == 0) continue;
      std::vector<Rat> z;
      for (int p = 0; p <= c.n(); ++p) z.push_back(rat_pow(s, c.n() - p) * rat_pow(t, p));
      try {
        PointPk a = apply_projection(c, z);
        PointPk b = evaluate(c, s, t);
        CHECK(a.q == b.q);
      } catch (const MathError& e) {
        CHECK(std::string(e.what()).find("IndeterminatePoint") != std::string::npos);
      }
    }
  }
  CurveParam cub = acnode_cubic();
  for (int sg : {1, -1}) {
    Complex i(Real(0), Real(sg));
    std::vector<Complex> z{Complex(Real(1)), i, i * i, i * i * i};
    auto w = apply_projection(cub, z);
    std::vector<Complex> target{Complex(), Complex(), Complex(Real(1))};
    CHECK(projective_distance(w, target) < Real(1e-30));
  }
  // the center: the common kernel of the coefficient rows
  CHECK_THROWS_WITH_AS(apply_projection(cub, std::vector<Rat>{0, 0, 0, 0}), doctest::Contains("PointInCenter"), MathError);
}

TEST_CASE("contracted lines") {
  CurveParam cub = acnode_cubic();
  auto xr = Ring::indexed("x", 3);
  Ideal L = contracted_lines_ideal(cub, I(xr, {"x1", "x0-x2"}), 2);
  CHECK(L == I(L.ring(), {"z0+z2", "z1+z3"}));
  Ideal T = contracted_lines_ideal(sextic(), I(xr, {"x1", "x2"}), 2);
  CHECK(T == I(T.ring(), {"z0", "z1", "z2", "z3", "z4"}));
  Ideal X2 = ideal_Xk(sextic(), 2);
  Ideal ten = contracted_lines_ideal(sextic(), X2, 2);
  HilbertData h = hilbert(ten);
  CHECK(h.krull_dim == 2);
  CHECK(h.degree == 10);
  CHECK(h.polynomial == UPoly(std::vector<Rat>{1, 10}));
}

TEST_CASE("properness") {
  CHECK_NOTHROW(check_proper(nodal_quartic()));
  CHECK_NOTHROW(check_proper(sextic()));
  CHECK_THROWS_WITH_AS(check_proper(parse_curve("s^4", "s^2*t^2", "t^4")), doctest::Contains("NotProper"), MathError);
  CHECK_THROWS_WITH_AS(check_proper(parse_curve("s^4+s*t^3", "s^3*t", "s^2*t^2")), doctest::Contains("CommonFactor"), MathError);
  CHECK_THROWS_WITH_AS(check_proper(parse_curve("s^3", "s^3+t^3", "t^3")), doctest::Contains("NotProper"), MathError);
}
