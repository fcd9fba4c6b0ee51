#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ratcurve {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

class MathError : public std::runtime_error {
 public:
  MathError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Parses "12", "-3/4" or a decimal such as "0.125" exactly.
Rat parse_rat(const std::string& s);

Rat rat_pow(const Rat& base, unsigned e);
Int binomial(unsigned n, unsigned k);

// Scales a vector of rationals to coprime integers with the sign chosen so the
// first nonzero entry is positive. Returns the scale factor used (v_int = f*v).
Rat primitive_scale(const std::vector<Rat>& v);

// Best rational approximations of x (given as a rational) with denominator
// at most max_den; convergents in increasing order of denominator.
std::vector<Rat> convergents(const Rat& x, const Int& max_den);

double to_double(const Rat& q);

}  // namespace ratcurve
