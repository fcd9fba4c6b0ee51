#include "ratcurve/strata.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <unistd.h>

#include "ratcurve/parse.hpp"
#include "ratcurve/resultant.hpp"

namespace ratcurve {

namespace {

constexpr const char* kCacheHeader = "ratcurve-stratum 1";

std::mutex g_mutex;
std::map<std::pair<int, std::vector<int>>, Ideal> g_memo;
bool g_dir_set = false;
std::string g_dir;

std::string file_name(int k, const Partition& l) {
  std::string s = "k" + std::to_string(k) + "_l";
  for (int p : l.nonzero()) s += "-" + std::to_string(p);
  return s + ".txt";
}

bool load(const std::string& dir, int k, const Partition& l, Ideal& out) {
  if (dir.empty()) return false;
  std::ifstream in(std::filesystem::path(dir) / file_name(k, l));
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return false;
  if (!std::getline(in, line) || line != "k " + std::to_string(k)) return false;
  if (!std::getline(in, line) || line != "lambda " + l.to_string()) return false;
  if (!std::getline(in, line) || line.rfind("gens ", 0) != 0) return false;
  size_t count = std::stoul(line.substr(5));
  RingPtr r = Ring::indexed("x", k + 1);
  std::vector<MultiPoly> g;
  try {
    while (g.size() < count && std::getline(in, line)) g.push_back(parse_polynomial(line, r));
  } catch (const MathError&) {
    return false;
  }
  if (g.size() != count) return false;
  out = Ideal(r, std::move(g));
  return true;
}

void store(const std::string& dir, int k, const Partition& l, const Ideal& I) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  auto gens = I.canonical_generators();
  std::ostringstream os;
  os << kCacheHeader << "\nk " << k << "\nlambda " << l.to_string() << "\ngens " << gens.size() << "\n";
  for (const auto& g : gens) os << g.to_string() << "\n";
  auto final_path = std::filesystem::path(dir) / file_name(k, l);
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << os.str();
    if (!out) return;
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

Ideal compute(int k, const Partition& lambda) {
  RingPtr xr = Ring::indexed("x", k + 1);
  auto parts = lambda.nonzero();
  const int m = static_cast<int>(parts.size());
  if (m == k) return Ideal::zero(xr);
  if (m == k - 1) return Ideal(xr, {generic_discriminant(k)});
  // image of (c, a_1..a_m) -> c * prod (s + a_i t)^l_i, then eliminate c, a
  std::vector<std::string> names{"c"};
  for (int i = 0; i < m; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i <= k; ++i) names.push_back("x" + std::to_string(i));
  RingPtr big = Ring::make(names);
  // coefficients of prod (s + a t)^l as polynomials in the a's, index = power of t
  std::vector<MultiPoly> coef{MultiPoly::constant(big, 1)};
  for (int i = 0; i < m; ++i) {
    MultiPoly a = MultiPoly::variable(big, 1 + i);
    for (int e = 0; e < parts[i]; ++e) {
      std::vector<MultiPoly> nx(coef.size() + 1, MultiPoly(big));
      for (size_t j = 0; j < coef.size(); ++j) {
        nx[j] += coef[j];
        nx[j + 1] += coef[j] * a;
      }
      coef = std::move(nx);
    }
  }
  MultiPoly c = MultiPoly::variable(big, 0);
  std::vector<MultiPoly> g;
  for (int i = 0; i <= k; ++i) g.push_back(MultiPoly::variable(big, 1 + m + i) - c * coef[i]);
  std::vector<int> front;
  for (int i = 0; i <= m; ++i) front.push_back(i);
  Ideal e = eliminate(Ideal(big, std::move(g)), front);
  return Ideal(xr, e.canonical_generators());
}

}  // namespace

void set_stratum_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lk(g_mutex);
  g_dir = dir;
  g_dir_set = true;
  // a new cache directory starts from its own files
  g_memo.clear();
}

std::string stratum_cache_dir() {
  std::lock_guard<std::mutex> lk(g_mutex);
  if (!g_dir_set) {
    const char* env = std::getenv("RATCURVE_STRATUM_CACHE");
    g_dir = env ? env : "";
    g_dir_set = true;
  }
  return g_dir;
}

MultiPoly generic_discriminant(int k) {
  RingPtr r = Ring::make([&] {
    std::vector<std::string> v{"u"};
    for (int i = 0; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }());
  // g(u) = sum x_i u^i = f(1,u); Res(g, g') = +-x_k * disc
  MultiPoly g(r), dg(r);
  MultiPoly u = MultiPoly::variable(r, 0);
  for (int i = 0; i <= k; ++i) {
    MultiPoly xi = MultiPoly::variable(r, 1 + i);
    g += xi * u.pow(i);
    if (i > 0) dg += xi * u.pow(i - 1) * Rat(i);
  }
  MultiPoly res = resultant(g, dg, 0);
  MultiPoly disc = res.exact_divide(MultiPoly::variable(r, 1 + k));
  RingPtr xr = Ring::indexed("x", k + 1);
  return disc.in_ring(xr).primitive();
}

Ideal rlambda_ideal(int k, const Partition& lambda) {
  if (k < 1 || lambda.k != k) throw MathError("BadPartition", "partition does not match k");
  auto key = std::make_pair(k, lambda.parts);
  {
    std::lock_guard<std::mutex> lk(g_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  const std::string dir = stratum_cache_dir();
  Ideal I;
  if (!load(dir, k, lambda, I)) {
    I = compute(k, lambda);
    store(dir, k, lambda, I);
  }
  std::lock_guard<std::mutex> lk(g_mutex);
  g_memo.emplace(key, I);
  return I;
}

}  // namespace ratcurve
