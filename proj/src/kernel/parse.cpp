#include "kernel/parse.hpp"

#include <cctype>

#include "kernel/error.hpp"

namespace vaw {

namespace {

struct ExprParser {
  const std::string& s;
  const std::vector<std::string>& vars;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }

  RatFunc factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RatFunc v = primary();
    if (eat('^')) v = v.pow(integer());
    return v;
  }

  long integer() {
    skip();
    if (eat('(')) {
      const long v = integer();
      if (!eat(')')) fail("expected ')' after exponent");
      return v;
    }
    const bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  RatFunc primary() {
    skip();
    if (eat('(')) {
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos >= s.size()) fail("unexpected end of expression");
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (std::isdigit(c)) {
      std::string digits;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
      return RatFunc::constant(static_cast<int>(vars.size()), Rational(BigInt(digits)));
    }
    if (std::isalpha(c) || c == '_') {
      std::string name;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        name += s[pos++];
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return RatFunc::variable(static_cast<int>(vars.size()), static_cast<int>(i));
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + s[pos] + "'");
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars) {
  ExprParser p{text, vars};
  RatFunc v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

Rational parse_rational_literal(const std::string& text) {
  size_t i = 0, j = text.size();
  while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string body = text.substr(i, j - i);
  if (body.empty()) throw ParseError("empty rational literal");
  const size_t slash = body.find('/');
  auto parse_int = [&](const std::string& part) -> BigInt {
    size_t k = 0;
    bool neg = false;
    if (k < part.size() && (part[k] == '-' || part[k] == '+')) {
      neg = part[k] == '-';
      ++k;
    }
    if (k >= part.size()) throw ParseError("bad rational literal '" + text + "'");
    BigInt v(0);
    for (; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw ParseError("bad rational literal '" + text + "'");
      v = v * 10 + (part[k] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(body));
  const BigInt num = parse_int(body.substr(0, slash));
  const BigInt den = parse_int(body.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in rational literal");
  return Rational(num, den);
}

}  // namespace vaw
