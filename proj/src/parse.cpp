#include "ratcurve/parse.hpp"

#include <cctype>

namespace ratcurve {

namespace {

class Parser {
 public:
  Parser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  MultiPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
        continue;
      }
      skip();
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
        throw ParseError("missing '*'", pos_);
      return acc;
    }
  }

  MultiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("exponent must be a nonnegative integer", start);
      if (pos_ - start > 4) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (ring_->index(name) < 0) throw ParseError("unknown variable '" + name + "'", start);
      return MultiPoly::variable(ring_, name);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  MultiPoly number() {
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    // a literal fraction binds tighter than anything else: 3/4
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string lit = s_.substr(start, pos_ - start);
    try {
      return MultiPoly::constant(ring_, parse_rat(lit));
    } catch (const std::exception&) {
      throw ParseError("bad number '" + lit + "'", start);
    }
  }

  const std::string& s_;
  RingPtr ring_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const RingPtr& ring) { return Parser(text, ring).run(); }

BinaryForm to_binary_form(const MultiPoly& p, int degree) {
  std::vector<Rat> c(degree + 1);
  const int it = p.ring()->index("t");
  for (const auto& [m, q] : p.terms()) {
    if (m.deg != degree) throw MathError("NotHomogeneous", p.to_string() + " is not homogeneous of degree " + std::to_string(degree));
    c[it >= 0 ? m.e[it] : 0] = q;
  }
  return BinaryForm(degree, std::move(c));
}

BinaryForm parse_binary_form(const std::string& text) {
  static const RingPtr st = Ring::make({"s", "t"});
  MultiPoly p = parse_polynomial(text, st);
  if (!p.is_homogeneous()) throw MathError("NotHomogeneous", "'" + text + "' is not homogeneous");
  return to_binary_form(p, std::max(p.total_degree(), 0));
}

CurveParam parse_curve(const std::string& f0, const std::string& f1, const std::string& f2) {
  static const RingPtr st = Ring::make({"s", "t"});
  std::vector<MultiPoly> p;
  int deg = -1;
  for (const auto* s : {&f0, &f1, &f2}) {
    p.push_back(parse_polynomial(*s, st));
    if (!p.back().is_homogeneous()) throw MathError("NotHomogeneous", "'" + *s + "' is not homogeneous");
    int d = p.back().total_degree();
    if (d < 0) continue;
    if (deg >= 0 && d != deg) throw MathError("DegreeMismatch", "components have different degrees");
    deg = d;
  }
  if (deg < 3) throw MathError("DegreeTooSmall", "degree must be at least 3");
  return CurveParam(to_binary_form(p[0], deg), to_binary_form(p[1], deg), to_binary_form(p[2], deg));
}

}  // namespace ratcurve
