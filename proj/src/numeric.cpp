#include "ratcurve/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ratcurve {

int PreimageGroup::total_multiplicity() const {
  int s = 0;
  for (const auto& e : preimages) s += e.multiplicity;
  return s;
}

PointPk image_point(const CurveParam& c, const P1Point& p) {
  if (p.infinity) return evaluate(c, Rat(0), Rat(1));
  if (p.u.exact) return evaluate(c, Rat(1), p.u.q);
  PointPk out;
  out.exact = false;
  PrecisionGuard g(std::max(p.u.precision_bits, kDefaultPrecisionBits));
  out.z = normalize_first(evaluate(c, p), two_pow(-current_precision_bits() / 2));
  return out;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<int>> cluster(const std::vector<PointPk>& imgs, double tol) {
  const int n = static_cast<int>(imgs.size());
  Dsu d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool same;
      if (imgs[i].exact && imgs[j].exact)
        same = imgs[i].q == imgs[j].q;
      else
        same = projective_distance(imgs[i].z, imgs[j].z) < Real(tol);
      if (same) d.join(i, j);
    }
  std::map<int, std::vector<int>> byroot;
  for (int i = 0; i < n; ++i) byroot[d.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : byroot) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<std::vector<int>>& g) {
  std::string s;
  for (const auto& c : g) {
    s += "{";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += "}";
  }
  return s;
}

}  // namespace

std::vector<PreimageGroup> group_preimages(const CurveParam& c, const DivisorP1& d, double tol, int precision_bits) {
  const int n = static_cast<int>(d.entries.size());
  std::vector<PointPk> img;
  for (const auto& e : d.entries) img.push_back(image_point(c, e.point));
  auto g1 = cluster(img, tol);
  // refine every root at twice the precision and cluster again
  const int bits2 = 2 * precision_bits;
  std::map<std::string, std::vector<CRoot>> refined;
  std::vector<PointPk> img2;
  std::vector<DivisorEntry> entries2 = d.entries;
  for (int i = 0; i < n; ++i) {
    auto& e = entries2[i];
    if (!e.point.infinity && !e.point.u.exact) {
      const std::string key = e.point.factor.to_string();
      if (!refined.count(key)) refined[key] = isolate_roots(e.point.factor, bits2);
      const CRoot* best = nullptr;
      Real bd = 0;
      for (const auto& r : refined[key]) {
        PrecisionGuard pg(bits2);
        Real dd = (r.z - e.point.u.z).abs();
        if (!best || dd < bd) {
          best = &r;
          bd = dd;
        }
      }
      e.point.u = *best;
    }
    img2.push_back(image_point(c, e.point));
  }
  auto g2 = cluster(img2, tol);
  if (g1 != g2)
    throw MathError("AmbiguousCluster", "grouping at " + std::to_string(precision_bits) + " bits " + describe(g1) +
                                            " differs from " + std::to_string(bits2) + " bits " + describe(g2));
  std::vector<PreimageGroup> out;
  for (const auto& grp : g2) {
    PreimageGroup pg;
    pg.image = img2[grp[0]];
    for (int i : grp) {
      if (img2[i].exact) pg.image = img2[i];
      pg.preimages.push_back(entries2[i]);
    }
    out.push_back(std::move(pg));
  }
  return out;
}

namespace {

bool preimage_real(const DivisorEntry& e) { return e.point.infinity || e.point.u.exact || e.point.u.real; }

bool point_real(const PointPk& p) {
  if (p.exact) return true;
  if (!p.coord_polys.empty()) return p.is_real();
  // numeric representative normalized with a leading 1: all coordinates real
  PrecisionGuard g(kDefaultPrecisionBits);
  Real eps = two_pow(-kDefaultPrecisionBits / 3);
  for (const auto& z : p.z)
    if (abs(z.im) > eps) return false;
  return true;
}

}  // namespace

RealPoint classify_real(const SingularPoint& sp) {
  RealPoint r;
  r.point = sp.coords;
  for (const auto& e : sp.preimages) (preimage_real(e) ? r.real_preimages : r.nonreal_preimages)++;
  // non-real preimages of a real point pair up under conjugation
  PrecisionGuard g(kDefaultPrecisionBits);
  Real eps = two_pow(-kDefaultPrecisionBits / 3);
  for (const auto& e : sp.preimages) {
    if (preimage_real(e)) continue;
    bool found = false;
    for (const auto& f : sp.preimages)
      if (!preimage_real(f) && f.multiplicity == e.multiplicity && (f.point.u.z - e.point.u.z.conj()).abs() < eps)
        found = true;
    if (!found) r.conjugation_ok = false;
  }
  if (!point_real(sp.coords)) {
    r.cls = RealClass::NonReal;
    r.conjugation_ok = true;  // only meaningful for real points
  }
  else if (r.nonreal_preimages == 0)
    r.cls = RealClass::RealOnCurve;
  else if (r.real_preimages == 0)
    r.cls = RealClass::Acnode;
  else
    r.cls = RealClass::Hidden;
  return r;
}

std::vector<RealPoint> real_mode(Pipeline& p) {
  std::vector<RealPoint> out;
  for (const auto& sp : p.points()) out.push_back(classify_real(sp));
  return out;
}

std::vector<RealPoint> real_mode(const CurveParam& c) {
  check_proper(c);
  Pipeline p(c);
  return real_mode(p);
}

}  // namespace ratcurve
