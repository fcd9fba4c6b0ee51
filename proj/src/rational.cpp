#include "ratcurve/rational.hpp"

#include <cctype>

namespace ratcurve {

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw MathError("ParseError", "empty number");
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto all_digits = [](const std::string& x) {
    if (x.empty()) return false;
    for (char c : x)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  Rat out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string a = body.substr(0, slash), b = body.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) throw MathError("ParseError", "bad rational '" + raw + "'");
    Int den(b);
    if (den == 0) throw MathError("ParseError", "zero denominator in '" + raw + "'");
    out = Rat(Int(a), den);
    out.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string a = body.substr(0, dot), b = body.substr(dot + 1);
    if ((a.empty() && b.empty()) || (!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)))
      throw MathError("ParseError", "bad decimal '" + raw + "'");
    Int num(a.empty() ? "0" : a);
    Int den = 1;
    for (char c : b) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    out = Rat(num, den);
    out.canonicalize();
  } else {
    if (!all_digits(body)) throw MathError("ParseError", "bad integer '" + raw + "'");
    out = Rat(Int(body));
  }
  return neg ? Rat(-out) : out;
}

Rat rat_pow(const Rat& base, unsigned e) {
  Rat r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat primitive_scale(const std::vector<Rat>& v) {
  Int l = 1, g = 0;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : v) {
    if (q == 0) continue;
    Int num = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return 1;
  Rat f(l, g);
  f.canonicalize();
  for (const auto& q : v)
    if (q != 0) {
      if (q < 0) f = -f;
      break;
    }
  return f;
}

std::vector<Rat> convergents(const Rat& x, const Int& max_den) {
  std::vector<Rat> out;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Int num = x.get_num(), den = x.get_den();
  while (den != 0) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    Rat c(p2, q2);
    c.canonicalize();
    out.push_back(c);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Int r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace ratcurve
