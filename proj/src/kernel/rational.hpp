#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "kernel/error.hpp"

namespace vaw {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always canonical: reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Integer power with negative exponents allowed; 0^e for e<0 is an error.
inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
    return rat_pow(Rational(1) / base, -e);
  }
  Rational acc(1);
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline int rat_sign(const Rational& r) { return r.sign(); }

}  // namespace vaw
