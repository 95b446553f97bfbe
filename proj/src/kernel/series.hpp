#pragma once

#include <map>
#include <string>
#include <utility>

#include "kernel/rational.hpp"

namespace vaw {

// Truncated power series in q whose coefficients are Laurent polynomials in u
// (u stands for y^{1/2}, so even u-exponents print as powers of y).  Terms of
// q-degree above qmax are discarded on every operation; q-degrees are >= 0.
class UQSeries {
 public:
  explicit UQSeries(int qmax = 0) : qmax_(qmax) {}
  static UQSeries one(int qmax) { return term(qmax, 0, 0, 1); }
  static UQSeries term(int qmax, int qexp, int uexp, const Rational& c);

  int qmax() const { return qmax_; }
  bool is_zero() const { return t_.empty(); }

  UQSeries operator-() const;
  UQSeries operator+(const UQSeries& o) const;
  UQSeries operator-(const UQSeries& o) const;
  UQSeries operator*(const UQSeries& o) const;
  UQSeries& operator+=(const UQSeries& o) { return *this = *this + o; }
  UQSeries& operator-=(const UQSeries& o) { return *this = *this - o; }
  UQSeries& operator*=(const UQSeries& o) { return *this = *this * o; }
  UQSeries scaled(const Rational& c) const;
  bool operator==(const UQSeries& o) const { return qmax_ == o.qmax_ && t_ == o.t_; }
  bool operator!=(const UQSeries& o) const { return !(*this == o); }

  UQSeries pow(long e) const;  // e >= 0

  // Multiplicative inverse mod q^{qmax+1}.  Requires the q^0 part to be a
  // single nonzero u-monomial (the only shape whose inverse keeps u-support
  // finite); anything else is a DomainError.
  UQSeries invert() const;

  const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }
  void add_term(int qexp, int uexp, const Rational& c);

  std::map<int, Rational> q_row(int q) const;  // uexp -> coefficient
  Rational row_sum_at_u1(int q) const;

  // One q-row as text, in y when every u-exponent is even, else in u.
  std::string row_to_string(int q) const;

 private:
  int qmax_;
  std::map<std::pair<int, int>, Rational> t_;
};

}  // namespace vaw
