#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ratcurve/ideal.hpp"
#include "ratcurve/parse.hpp"

namespace th {

using namespace ratcurve;

inline MultiPoly P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

inline Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(P(s, r));
  return Ideal(r, std::move(g));
}

inline BinaryForm B(const std::string& s) { return parse_binary_form(s); }

}  // namespace th
