// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "curves.hpp"
#include "helpers.hpp"
#include "ratcurve/numeric.hpp"
#include "ratcurve/oracle.hpp"
#include "ratcurve/pipeline.hpp"

using namespace ratcurve;
using namespace th;

namespace {

struct Failures {
  std::vector<std::string> msgs;
  void expect(bool ok, const std::string& what) {
    if (!ok) msgs.push_back(what);
  }
};

Partition Pt(std::vector<int> v) { return Partition::make(std::move(v)); }

PointPk rat_point(std::vector<Rat> q) { return PointPk::from_rational(std::move(q)); }

double dist(const PointPk& p, std::vector<Complex> w) {
  PrecisionGuard g(kDefaultPrecisionBits);
  return to_double(projective_distance(p.z, w));
}

double dist(const PointPk& p, std::vector<double> want) {
  std::vector<Complex> w;
  for (double x : want) w.emplace_back(Real(x));
  return dist(p, w);
}

std::set<std::vector<Rat>> exact_points(const std::vector<SingularPoint>& pts, int mult) {
  std::set<std::vector<Rat>> s;
  for (const auto& p : pts)
    if (p.multiplicity == mult && p.coords.exact) s.insert(p.coords.q);
  return s;
}

std::multiset<int> a_types(const std::vector<SingularPoint>& pts) {
  std::multiset<int> s;
  for (const auto& p : pts)
    if (p.a_index) s.insert(*p.a_index);
  return s;
}

std::multiset<int> a_set(int big, int ones) {
  std::multiset<int> s{big};
  for (int i = 0; i < ones; ++i) s.insert(1);
  return s;
}

std::set<std::vector<Rat>> support_x2(Pipeline& p) {
  std::set<std::vector<Rat>> s;
  for (const auto& r : p.x2_points())
    if (r.point.exact) s.insert(r.point.q);
  return s;
}

bool is_singular(const MultiPoly& F, std::vector<Rat> q) { return verify_singular(F, rat_point(std::move(q)), 2).pass; }

CurveParam random_curve(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  for (;;) {
    std::vector<BinaryForm> f;
    for (int u = 0; u < 3; ++u) {
      std::vector<Rat> c(n + 1);
      for (auto& x : c) x = d(rng);
      f.emplace_back(n, c);
    }
    if (f[0].is_zero() || f[1].is_zero() || f[2].is_zero()) continue;
    try {
      CurveParam cp(f[0], f[1], f[2]);
      check_proper(cp);
      return cp;
    } catch (const MathError&) {
    }
  }
}

int binom2(int m) { return m * (m - 1) / 2; }

// -------------------------------------------------------------------------

void c1_sextic(Failures& f) {
  Pipeline p(sextic());
  const CountResult& cr = p.counts();
  f.expect(cr.N == 4, "N = " + std::to_string(cr.N));
  f.expect(cr.N_k.count(3) && cr.N_k.at(3) == 3, "N_3 != 3");
  f.expect(cr.N_k.count(2) && cr.N_k.at(2) == 1, "N_2 != 1");
  const Ideal& X2 = p.X(2);
  f.expect(radical_zero_dim(X2) == X2, "X_2 not reduced");
  f.expect(projective_degree(X2) == 10, "deg X_2 = " + std::to_string(projective_degree(X2)));
  f.expect(projective_degree(p.X(3)) == 3, "deg X_3 = " + std::to_string(projective_degree(p.X(3))));
  HilbertData h = hilbert(contracted_lines_ideal(sextic(), X2, 2));
  f.expect(h.degree == 10, "contracted lines degree " + h.degree.get_str());
  f.expect(h.krull_dim - 1 == 1, "contracted lines dimension " + std::to_string(h.krull_dim - 1));

  const PreimageResult& pr = p.preimages();
  f.expect(pr.F.count(3) && pr.F.at(3).associate_of(B("-s^8*t + 5*s^7*t^2 + 29/4*s^6*t^3 - 217/4*s^5*t^4 + "
                                                      "65/4*s^4*t^5 + 341/4*s^3*t^6 - 9/2*s^2*t^7 - 18*s*t^8")),
           "F_3 differs from the printed form");
  f.expect(pr.fresh.count(2) && pr.fresh.at(2).associate_of(B("713*s^2 - 1527*s*t - 8704*t^2")),
           "F_2/F_3 differs from the printed form");
  f.expect(pr.divisibility_failures.empty(), "F_3 does not divide F_2");

  const auto& pts = p.points();
  f.expect(exact_points(pts, 3) == std::set<std::vector<Rat>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, "triple points");
  const SingularPoint* node = nullptr;
  for (const auto& sp : pts)
    if (sp.multiplicity == 2) node = &sp;
  f.expect(node != nullptr, "no node");
  if (!node) return;
  // printed coordinates carry 2 and 2 significant digits; the computed node
  // must round to them and be accurate to 1e-6 against its exact value
  PrecisionGuard g(kDefaultPrecisionBits);
  std::vector<Complex> z = node->coords.z;
  const double y = to_double((z[1] / z[0]).re), w = to_double((z[2] / z[0]).re);
  f.expect(std::abs(y - 0.12) < 0.005 && std::abs(w - 0.023) < 0.0005, "node does not round to (1:0.12:0.023)");
  f.expect(node->coords.exact, "node not exact");
  if (node->coords.exact) {
    std::vector<Complex> q;
    for (const auto& c : node->coords.q) q.push_back(Complex::from_rat(c));
    f.expect(dist(node->coords, q) < 1e-6, "numeric node farther than 1e-6 from the exact node");
    MultiPoly F = implicitize_oracle(sextic());
    f.expect(verify_singular(F, node->coords, 2).pass, "oracle rejects the node");
  }
}

void c2_cuspidal(Failures& f) {
  Pipeline a(cusp_pair_quartic());
  f.expect(a.cuspidal().cuspidal, "first quartic not cuspidal");
  f.expect(support_x2(a) == std::set<std::vector<Rat>>{{0, 0, 1}, {1, 0, 0}}, "first quartic Supp(X_2)");
  f.expect(a.x2_points().size() == 2, "first quartic support size");
  Pipeline b(e6_quartic());
  f.expect(b.cuspidal().cuspidal, "second quartic not cuspidal");
  f.expect(b.x2_points().size() == 1 && b.cuspidal().support_size == 1, "second quartic support size");
  f.expect(projective_degree(b.X(2)) == 3, "second quartic deg X_2");
  CuspidalResult s = cuspidal_test(sextic());
  f.expect(s.ordinary_only && !s.cuspidal, "sextic not ordinary_only");
}

void c3_branches(Failures& f) {
  Pipeline p(two_branch_quintic());
  const CountResult& cr = p.counts();
  f.expect(cr.N == 1 && cr.N_k.count(4) && cr.N_k.at(4) == 1, "expected one point of multiplicity 4");
  auto it = cr.branches.find(4);
  f.expect(it != cr.branches.end() && it->second.count(Pt({2, 2})) && it->second.at(Pt({2, 2})) == 1,
           "branch partition (2,2) missing");
  auto pts = solve_points(p.Z(4));
  f.expect(pts.size() == 1 && pts[0].exact && pts[0].q == std::vector<Rat>{0, 0, 1, 0, 0}, "Supp(X_4)");
  const auto& sp = p.points();
  f.expect(sp.size() == 1 && sp[0].branch_partition == Pt({2, 2}), "point partition");
}

void c4_ideals(Failures& f) {
  IdealsResult a = singular_ideals(cusps_node_quartic());
  f.expect(a.J_N == I(a.J_N.ring(), {"w1^2+w1*w2", "w0*w1-w1*w2", "w0*w2+w1*w2"}), "J_N of the first quartic");
  IdealsResult b = singular_ideals(nodal_quartic());
  f.expect(b.J_N == I(b.J_N.ring(), {"w1^2+w0*w2-w2^2", "w0*w1+w1*w2", "w0^2-w2^2"}), "J_N of the second quartic");
}

void c5_classification(Failures& f) {
  f.expect(a_types(classify_double_points(tacnode_quartic())) == std::multiset<int>{1, 3}, "quartic types");
  Pipeline s(a6_septic());
  f.expect(a_types(s.classified()) == a_set(6, 12), "septic types");
  f.expect(projective_degree(s.X(2)) == 15, "septic deg X_2");
  f.expect(s.x2_points().size() == 13, "septic |Supp(X_2)| = " + std::to_string(s.x2_points().size()));
  f.expect(colon_chain_degrees(s.X(2), conic_poly(s.X(2).ring()), 5) == std::vector<int>{15, 14, 13, 12, 12},
           "septic colon chain");
  f.expect(a_types(classify_double_points(a4_quintic())) == a_set(4, 4), "quintic types");
}

void c6_coordinates(Failures& f) {
  Pipeline p(nodal_quartic());
  const PreimageResult& pr = p.preimages();
  f.expect(pr.F.count(2) && pr.F.at(2).associate_of(B("-s^6 + s^4*t^2 - s^2*t^4 + t^6")), "F");
  const auto& pts = p.points();
  int preimages = 0;
  std::vector<std::pair<double, double>> u;
  {
    PrecisionGuard g(kDefaultPrecisionBits);
    for (const auto& sp : pts)
      for (const auto& e : sp.preimages) {
        preimages += e.multiplicity;
        if (!e.point.infinity) u.emplace_back(to_double(e.point.u.z.re), to_double(e.point.u.z.im));
      }
  }
  f.expect(preimages == 6, "preimage count " + std::to_string(preimages));
  auto has = [&](double re, double im) {
    for (auto [a, b] : u)
      if (std::hypot(a - re, b - im) < 1e-8) return true;
    return false;
  };
  // (2 : a + ib) is (1 : (a + ib)/2)
  const double h = std::sqrt(2.0) / 2;
  f.expect(has(1, 0) && has(-1, 0), "(1:1) or (1:-1) missing");
  for (double a : {h, -h})
    for (double b : {h, -h}) f.expect(has(a, b), "missing preimage (2:+-sqrt2+-i sqrt2)");
  f.expect(pts.size() == 3, "cluster count " + std::to_string(pts.size()));
  int found = 0;
  for (const auto& sp : pts) {
    if (sp.coords.exact && sp.coords.q == std::vector<Rat>{1, 0, 1}) ++found;
    if (dist(sp.coords, {1, std::sqrt(2.0), -1}) < 1e-8) ++found;
    if (dist(sp.coords, {1, -std::sqrt(2.0), -1}) < 1e-8) ++found;
  }
  f.expect(found == 3, "nodes (1:0:1), (1:+-sqrt2:-1)");
}

void c7_real(Failures& f) {
  auto a = real_mode(acnode_cubic());
  f.expect(a.size() == 1 && a[0].cls == RealClass::Acnode && a[0].point.q == std::vector<Rat>{0, 0, 1}, "cubic acnode");
  auto h = real_mode(hidden_quartic());
  f.expect(h.size() == 1 && h[0].cls == RealClass::Hidden && h[0].point.q == std::vector<Rat>{0, 0, 1},
           "quartic hidden triple point");
  Pipeline q(a4_quintic());
  auto r = real_mode(q);
  std::set<std::vector<Rat>> acnodes;
  int nonreal = 0;
  bool a4 = false;
  for (const auto& x : r) {
    if (x.cls == RealClass::Acnode && x.point.exact) acnodes.insert(x.point.q);
    if (x.cls == RealClass::NonReal) ++nonreal;
    if (x.cls == RealClass::RealOnCurve && x.point.exact && x.point.q == std::vector<Rat>{0, 0, 1}) a4 = true;
  }
  // (1:-1:-2) is f(e^{-i pi/3}); the printed (1:-1:2) is not a singular point
  f.expect(acnodes == std::set<std::vector<Rat>>{{1, 1, 0}, {1, -1, -2}}, "quintic acnodes");
  MultiPoly F = implicitize_oracle(a4_quintic());
  f.expect(is_singular(F, {1, -1, -2}) && !is_singular(F, {1, -1, 2}), "oracle on (1:-1:-2) vs (1:-1:2)");
  for (const auto& sp : q.classified())
    if (sp.coords.exact && sp.coords.q == std::vector<Rat>{0, 0, 1}) a4 = a4 && sp.a_index == 4;
  f.expect(a4, "real A_4 at (0:0:1)");
  f.expect(nonreal == 2, "nonreal nodes " + std::to_string(nonreal));
}

void c8_properties(Failures& f) {
  for (int n = 4; n <= 7; ++n) {
    std::mt19937 rng(20240611u + n);
    for (int i = 0; i < 25; ++i) {
      CurveParam c = random_curve(rng, n);
      const std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(i) + ": ";
      try {
        Pipeline p(c);
        f.expect(projective_degree(p.X(2)) == binom2(n - 1), tag + "deg X_2");
        f.expect(p.counts().N_k == p.ideals().N_k && p.counts().N == p.ideals().N, tag + "Algorithm 1 vs 2");
        const PreimageResult& pr = p.preimages();
        f.expect(pr.divisibility_failures.empty(), tag + "divisibility failure reported");
        for (const auto& [k, Fk] : pr.F)
          if (pr.F.count(k + 1)) f.expect(pr.F.at(k + 1).divides(Fk), tag + "F_{k+1} does not divide F_k");
        int dsum = 0;
        bool complete = true;
        for (const auto& sp : p.classified()) {
          if (sp.delta) dsum += *sp.delta;
          else complete = false;
        }
        f.expect(complete && dsum == binom2(n - 1), tag + "delta sum " + std::to_string(dsum));
        MultiPoly F = implicitize_oracle(c);
        std::vector<PointPk> cs;
        std::vector<int> ks;
        for (const auto& sp : p.classified()) cs.push_back(sp.coords), ks.push_back(sp.multiplicity);
        for (const auto& v : verify_singular(F, cs, ks)) f.expect(v.pass, tag + "oracle: " + v.detail);
      } catch (const std::exception& e) {
        f.expect(false, tag + e.what() + " on " + c.to_string());
      }
    }
  }
}

void c9_combinatorics(Failures& f) {
  for (int k = 1; k <= 6; ++k) {
    auto ps = partitions_of(k);
    for (const auto& a : ps)
      for (const auto& b : ps)
        f.expect(preceq(a, b) == preceq_bruteforce(a, b), "preceq " + a.to_string() + " " + b.to_string());
    if (k < 2) continue;
    for (const auto& l : ps)
      for (const auto& s : partitions_of(k - 1))
        f.expect(ancestor_multiplicity(l, s) == ancestor_multiplicity_bruteforce(l, s),
                 "ancestor_multiplicity " + l.to_string() + " " + s.to_string());
  }
}

void c10_near_quartic(Failures& f) {
  Pipeline p(near_quartic());
  const PreimageResult& pr = p.preimages();
  f.expect(pr.F.count(2) &&
               pr.F.at(2).associate_of(B("-s*t*(s^4 - 2868/37*s^3*t - 16656/37*s^2*t^2 + 2868/37*s*t^3 + t^4)")),
           "F");
  const std::vector<SingularPoint>* pts = nullptr;
  try {
    pts = &p.points();
  } catch (const MathError& e) {
    f.expect(false, std::string("clustering at default settings: ") + e.what());
    return;
  }
  f.expect(pts->size() == 3, "node count " + std::to_string(pts->size()));
  int found = 0;
  for (const auto& sp : *pts) {
    f.expect(sp.multiplicity == 2 && sp.preimages.size() == 2, "not a node");
    if (dist(sp.coords, {0.881, 1.821, 1}) < 1e-3) ++found;
    if (dist(sp.coords, {0.333, 0.689, 1}) < 1e-3) ++found;
    if (sp.coords.exact && sp.coords.q == std::vector<Rat>{1, 1, 1}) ++found;
  }
  f.expect(found == 3, "nodes (0.881:1.821:1), (0.333:0.689:1), exact (1:1:1)");
  // f(1:0) = f(0:1) = (1:1:1); the printed (1:-1:1) is not singular
  MultiPoly F = implicitize_oracle(near_quartic());
  f.expect(is_singular(F, {1, 1, 1}) && !is_singular(F, {1, -1, 1}), "oracle on (1:1:1) vs (1:-1:1)");
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Failures&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "sextic counts, ideals, preimage forms, points", 300, c1_sextic},
      {2, "cuspidal criterion", 90, c2_cuspidal},
      {3, "branch structure (2,2) of the quintic", 60, c3_branches},
      {4, "J_N ideals of two quartics", 120, c4_ideals},
      {5, "A_s classification and the septic colon chain", 540, c5_classification},
      {6, "coordinates of the nodal quartic", 60, c6_coordinates},
      {7, "real mode", 180, c7_real},
      {8, "property suite on 100 random curves", 2700, c8_properties},
      {9, "partition combinatorics against brute force", 10, c9_combinatorics},
      {10, "near-coincident nodes of the comparison quartic", 60, c10_near_quartic},
  };
  int failed = 0;
  for (const auto& c : all) {
    Failures f;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream budget;
    budget.precision(3);
    budget << secs;
    f.expect(secs < c.budget_s, "over the time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    const bool ok = f.msgs.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << budget.str() << " s)\n";
    for (const auto& m : f.msgs) std::cout << "    " << m << "\n";
    std::cout.flush();
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
