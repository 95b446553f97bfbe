#pragma once

#include <string>
#include <vector>

#include "kernel/ratfunc.hpp"

namespace vaw {

// Parses an arithmetic expression over the named variables.  Supported:
// + - * / ^ with the usual precedence, unary minus, parentheses, nonnegative
// integer literals; '^' takes an integer exponent, negatives parenthesized or
// bare.  Fractions are ordinary divisions ("1/2", "(x1+1)/x2").
RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars);

// Parses "p", "-p", "p/q" (q > 0 after normalization) into an exact rational.
Rational parse_rational_literal(const std::string& text);

}  // namespace vaw
