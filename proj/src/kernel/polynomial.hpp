#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kernel/rational.hpp"

namespace vaw {

// Exponent vector; size == nvars of the owning polynomial.
using Monomial = std::vector<uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic with the
// earlier variable more significant.  Maps are ascending, so the leading term
// of a nonzero polynomial is *rbegin().
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db;
    // lex: first differing slot decides; bigger exponent there = bigger monomial
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Multivariate polynomial over the rationals with exact coefficients.
// Invariant: no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0)); }
  Rational constant_value() const;  // throws DomainError unless is_constant()
  bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

  long total_degree() const;      // -1 for the zero polynomial
  long degree_in(int var) const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int var) const;
  Rational eval(const std::vector<Rational>& pt) const;

  Rational leading_coeff() const;  // grlex leading coefficient; 0 if zero
  const Monomial& leading_monomial() const;  // throws DomainError if zero

  // Coefficient of var^k, as a polynomial in the remaining variables (the
  // returned polynomial still has nvars slots; exponent of var is zero).
  Polynomial coeff_of(int var, uint32_t k) const;

  // Exact division; throws DomainError when the division leaves a remainder.
  Polynomial divide_exact(const Polynomial& d) const;

  // Monic (grlex) greatest common divisor; gcd(0,0) == 0, constants are units.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::vector<std::string>& names) const;

  const TermMap& terms() const { return terms_; }
  void set_term(const Monomial& m, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

 private:
  int nvars_;
  TermMap terms_;

  Polynomial monic() const;
  Polynomial content_in(int var) const;
  bool only_var(int var) const;
  static Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, int var);
  static Polynomial gcd_list(const std::vector<Polynomial>& ps);
};

}  // namespace vaw
