#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ratcurve {

inline constexpr int kMaxVars = 24;

// Exponent vector; slots beyond the ring size stay zero.
struct Mono {
  std::array<uint16_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Mono var(int i, int power = 1) {
    Mono m;
    m.e[i] = static_cast<uint16_t>(power);
    m.deg = static_cast<uint16_t>(power);
    return m;
  }
  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
    r.deg = static_cast<uint16_t>(deg + o.deg);
    return r;
  }
  // Requires o | *this.
  Mono operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Mono lcm(const Mono& o) const {
    Mono r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
  }
  bool coprime(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  uint32_t support_mask() const {
    uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= (1u << i);
    return m;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  bool is_one() const { return deg == 0; }
  // lexicographic on exponents, for ordered containers
  bool operator<(const Mono& o) const { return e < o.e; }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

// Graded reverse lexicographic, lexicographic, or a block order whose front
// block (compared by grevlex) dominates the back block (grevlex or lex).
class MonomialOrder {
 public:
  enum class Kind { GRevLex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, 0, Kind::GRevLex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, Kind::Lex); }
  static MonomialOrder block(const std::vector<int>& front, Kind back = Kind::GRevLex);

  Kind kind() const { return kind_; }
  uint32_t front_mask() const { return front_; }
  Kind back_kind() const { return back_; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Mono& a, const Mono& b) const;
  bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && front_ == o.front_ && back_ == o.back_;
  }
  std::string describe() const;

 private:
  MonomialOrder(Kind k, uint32_t front, Kind back) : kind_(k), front_(front), back_(back) {}
  Kind kind_;
  uint32_t front_;
  Kind back_;
};

}  // namespace ratcurve
