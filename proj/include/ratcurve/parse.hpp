#pragma once

#include <string>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/curve.hpp"
#include "ratcurve/multipoly.hpp"

namespace ratcurve {

// Syntax errors carry the byte offset of the offending token.
class ParseError : public MathError {
 public:
  ParseError(const std::string& what, size_t pos)
      : MathError("SyntaxError", what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

// Grammar: sums of products of integers, rationals (3/4), decimals (0.125),
// variable names of `ring`, parentheses and ^ with a nonnegative integer
// exponent. Multiplication must be written explicitly with '*'.
MultiPoly parse_polynomial(const std::string& text, const RingPtr& ring);

// A form in s and t; throws NotHomogeneous.
BinaryForm parse_binary_form(const std::string& text);
// A zero component takes the common degree of the others.
BinaryForm to_binary_form(const MultiPoly& p, int degree);

// Throws DegreeMismatch, DegreeTooSmall or NotHomogeneous.
CurveParam parse_curve(const std::string& f0, const std::string& f1, const std::string& f2);

}  // namespace ratcurve
