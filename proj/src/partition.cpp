#include "ratcurve/partition.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ratcurve {

Partition Partition::make(std::vector<int> parts, int k) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw MathError("BadPartition", "negative part");
    sum += p;
  }
  if (k < 0) k = sum;
  if (sum != k) throw MathError("BadPartition", "parts do not sum to k");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts.resize(k, 0);
  return Partition{k, std::move(parts)};
}

std::vector<int> Partition::nonzero() const {
  std::vector<int> v;
  for (int p : parts)
    if (p > 0) v.push_back(p);
  return v;
}

int Partition::length() const { return static_cast<int>(nonzero().size()); }

std::string Partition::to_string() const {
  std::string s = "(";
  auto nz = nonzero();
  for (size_t i = 0; i < nz.size(); ++i) s += (i ? "," : "") + std::to_string(nz[i]);
  return s + ")";
}

bool Partition::operator<(const Partition& o) const {
  if (k != o.k) return k < o.k;
  return parts > o.parts;
}

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(Partition::make(cur, k));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

namespace {

void same_size(const Partition& a, const Partition& b, int diff) {
  if (a.k != b.k + diff) throw MathError("SizeMismatch", "partitions of incompatible sizes");
}

// Fill bins (parts of lambda) exactly with the parts of mu.
bool pack(const std::vector<int>& items, size_t i, std::vector<int>& room) {
  if (i == items.size()) {
    for (int r : room)
      if (r != 0) return false;
    return true;
  }
  for (size_t b = 0; b < room.size(); ++b) {
    if (room[b] < items[i]) continue;
    bool dup = false;  // bins with equal remaining room are interchangeable
    for (size_t c = 0; c < b; ++c)
      if (room[c] == room[b]) dup = true;
    if (dup) continue;
    room[b] -= items[i];
    if (pack(items, i + 1, room)) return true;
    room[b] += items[i];
  }
  return false;
}

}  // namespace

bool preceq(const Partition& lambda, const Partition& mu) {
  same_size(lambda, mu, 0);
  std::vector<int> room = lambda.nonzero();
  std::vector<int> items = mu.nonzero();
  if (items.size() < room.size()) return false;
  return pack(items, 0, room);
}

std::vector<Partition> covers_below(const Partition& lambda) {
  auto nz = lambda.nonzero();
  std::set<std::vector<int>> seen;
  std::vector<Partition> out;
  for (size_t i = 0; i < nz.size(); ++i)
    for (size_t j = i + 1; j < nz.size(); ++j) {
      std::vector<int> v;
      for (size_t l = 0; l < nz.size(); ++l)
        if (l != i && l != j) v.push_back(nz[l]);
      v.push_back(nz[i] + nz[j]);
      Partition p = Partition::make(v, lambda.k);
      if (seen.insert(p.parts).second) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int ancestor_multiplicity(const Partition& lambda, const Partition& sigma) {
  same_size(lambda, sigma, 1);
  int count = 0;
  for (int i = 0; i < lambda.k; ++i) {
    if (lambda.parts[i] == 0) continue;
    std::vector<int> v = lambda.parts;
    --v[i];
    if (Partition::make(v, sigma.k) == sigma) ++count;
  }
  return count;
}

Int sub_shape_count(const Partition& mu, const Partition& sigma) {
  auto m = mu.nonzero();
  Int count = 0;
  std::vector<int> nu(m.size());
  std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
    if (i == m.size()) {
      if (rem == 0 && Partition::make(nu, sigma.k) == sigma) ++count;
      return;
    }
    for (int v = 0; v <= std::min(m[i], rem); ++v) {
      nu[i] = v;
      rec(i + 1, rem - v);
    }
    nu[i] = 0;
  };
  rec(0, sigma.k);
  return count;
}

int ancestor_multiplicity_bruteforce(const Partition& lambda, const Partition& sigma) {
  // enumerate every tuple obtained from lambda by lowering one entry of the
  // padded vector, including the zero entries (which must fail)
  int count = 0;
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    std::vector<int> v = lambda.parts;
    v[i] -= 1;
    if (v[i] < 0) continue;
    std::vector<int> w(v);
    std::sort(w.begin(), w.end(), std::greater<int>());
    w.resize(sigma.k);
    bool ok = true;
    int sum = 0;
    for (int x : v) sum += x;
    if (sum != sigma.k) ok = false;
    if (ok && w == sigma.parts) ++count;
  }
  return count;
}

bool preceq_bruteforce(const Partition& lambda, const Partition& mu) {
  // closure of lambda under splitting one part into two positive parts
  std::set<std::vector<int>> seen{lambda.nonzero()};
  std::vector<std::vector<int>> stack{lambda.nonzero()};
  auto target = mu.nonzero();
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur == target) return true;
    for (size_t i = 0; i < cur.size(); ++i)
      for (int a = 1; a < cur[i]; ++a) {
        auto nx = cur;
        nx[i] = a;
        nx.push_back(cur[i] - a);
        std::sort(nx.begin(), nx.end(), std::greater<int>());
        if (seen.insert(nx).second) stack.push_back(nx);
      }
  }
  return false;
}

}  // namespace ratcurve
