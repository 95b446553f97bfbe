#pragma once

#include <string>
#include <vector>

#include "kernel/polynomial.hpp"

namespace vaw {

// Rational function over the rationals in canonical form:
//   gcd(num, den) == 1, den monic under grlex, and zero is 0/1.
// Equality of canonical forms is therefore structural equality.
class RatFunc {
 public:
  explicit RatFunc(int nvars = 0) : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
  RatFunc(Polynomial num, Polynomial den);
  static RatFunc constant(int nvars, const Rational& c) {
    return RatFunc(Polynomial::constant(nvars, c), Polynomial::constant(nvars, 1));
  }
  static RatFunc variable(int nvars, int i) {
    return RatFunc(Polynomial::variable(nvars, i), Polynomial::constant(nvars, 1));
  }
  static RatFunc from_poly(Polynomial p) {
    const int n = p.nvars();
    return RatFunc(std::move(p), Polynomial::constant(n, 1));
  }

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return is_poly() && num_.is_constant(); }
  Rational constant_value() const;
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(long e) const;
  RatFunc partial(int var) const;

  // Composition: plug args[i] in for variable i.  All args must share one
  // arity, which becomes the arity of the result.
  RatFunc substitute(const std::vector<RatFunc>& args) const;

  Rational eval(const std::vector<Rational>& pt) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Polynomial num_, den_;
  void normalize();
};

}  // namespace vaw
