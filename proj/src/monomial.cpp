#include "ratcurve/monomial.hpp"

#include "ratcurve/rational.hpp"

namespace ratcurve {

MonomialOrder MonomialOrder::block(const std::vector<int>& front, Kind back) {
  uint32_t mask = 0;
  for (int i : front) {
    if (i < 0 || i >= kMaxVars) throw MathError("BadOrder", "block variable out of range");
    mask |= (1u << i);
  }
  if (back == Kind::Block) throw MathError("BadOrder", "nested block orders are not supported");
  return MonomialOrder(Kind::Block, mask, back);
}

namespace {

int grevlex_masked(const Mono& a, const Mono& b, uint32_t mask) {
  int da = 0, db = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) {
      da += a.e[i];
      db += b.e[i];
    }
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (!(mask & (1u << i))) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int lex_masked(const Mono& a, const Mono& b, uint32_t mask) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (!(mask & (1u << i))) continue;
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_full(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Mono& a, const Mono& b) const {
  switch (kind_) {
    case Kind::GRevLex:
      return grevlex_full(a, b);
    case Kind::Lex:
      return lex_masked(a, b, ~0u);
    case Kind::Block: {
      int c = grevlex_masked(a, b, front_);
      if (c) return c;
      return back_ == Kind::Lex ? lex_masked(a, b, ~front_) : grevlex_masked(a, b, ~front_);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::GRevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(front_) + (back_ == Kind::Lex ? ",lex)" : ",grevlex)");
  }
  return "?";
}

}  // namespace ratcurve
