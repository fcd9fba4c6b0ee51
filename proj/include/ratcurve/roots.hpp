#pragma once

#include <string>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/mpcomplex.hpp"
#include "ratcurve/upoly.hpp"

namespace ratcurve {

inline constexpr int kDefaultPrecisionBits = 256;
inline constexpr int kMaxPrecisionBits = 4096;

// One root of a squarefree polynomial with a certified inclusion disk that
// contains no other root.
struct CRoot {
  Complex z;
  Real radius;
  bool real = false;   // decided exactly (Sturm count matches the disks meeting the axis)
  bool exact = false;  // rational root, verified exactly
  Rat q;               // the rational value when exact
  int precision_bits = 0;
};

// Isolates all complex roots of a squarefree polynomial of degree >= 1 by
// Aberth iteration with deterministic seeds. Precision starts at
// `precision_bits` and doubles until the enclosures are pairwise disjoint;
// throws PrecisionExhausted past kMaxPrecisionBits (raised when the leading
// coefficient needs more bits for rational root recognition).
// Output order: by real part, then imaginary part.
std::vector<CRoot> isolate_roots(const UPoly& f, int precision_bits = kDefaultPrecisionBits);

// A point of P^1: either (0:1) or (1:u) with u a root of `factor`.
struct P1Point {
  bool infinity = false;
  CRoot u;
  UPoly factor;  // squarefree factor of f(1,u) that u belongs to; "u" itself never for infinity
  // (s:t) numerically, as (1:u) or (0:1).
  Complex s() const;
  Complex t() const;
  std::string to_string(int digits = 12) const;
};

struct DivisorEntry {
  P1Point point;
  int multiplicity = 0;
};

struct DivisorP1 {
  int degree = 0;
  std::vector<DivisorEntry> entries;
  int total_multiplicity() const;
};

// Zero divisor of a nonzero binary form; the root (0:1) comes from the power
// of s dividing f, the others from f(1,u).
DivisorP1 complex_roots(const BinaryForm& f, int precision_bits = kDefaultPrecisionBits);

}  // namespace ratcurve
