#include "cisupport/exactalg/poly_text.hpp"

#include <cctype>

namespace cisupport {

namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    Poly r = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyParseError(msg + " at column " + std::to_string(pos_ + 1), static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    while (true) {
      skip_ws();
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Poly t = product();
      acc = negate ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (accept('*')) acc = ring_.mul(acc, power());
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      long long e = integer();
      if (e < 0 || e > 1000) fail("exponent out of range");
      base = ring_.pow(base, static_cast<int>(e));
    }
    return base;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000000LL) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ring_.constant(ring_.field().from_int(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < ring_.nvars(); ++i)
        if (ring_.names()[i] == name) return ring_.var(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRing& ring, std::string_view text) { return Parser(ring, text).parse(); }

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += "*";
    out += ring.names()[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const PolyRing& ring, const Poly& f) {
  if (f.is_zero()) return "0";
  const Field& k = ring.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string coef = k.format(t.c);
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.m.is_one()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += format_monomial(ring, t.m);
    }
  }
  return out;
}

}  // namespace cisupport
