#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "kernel/ratfunc.hpp"

namespace vaw {

// Element of the coefficient superalgebra: functions of n even variables
// tensored with the exterior algebra on m odd generators.  Stored as a map
// from the set of odd generators used (bitmask, bit a = generator a) to the
// rational-function coefficient; products of odd generators are kept in
// increasing index order, and a Koszul sign accounts for reordering.
class SuperScalar {
 public:
  SuperScalar(int n = 0, int m = 0) : n_(n), m_(m) {}
  static SuperScalar from_ratfunc(const RatFunc& f, int m);
  static SuperScalar from_rational(int n, int m, const Rational& c);
  static SuperScalar variable(int n, int m, int i);  // x_i
  static SuperScalar phi(int n, int m, int alpha);   // odd generator

  int n() const { return n_; }
  int m() const { return m_; }
  bool is_zero() const { return c_.empty(); }

  RatFunc term(uint32_t mask) const;
  void set_term(uint32_t mask, const RatFunc& f);
  void add_term(uint32_t mask, const RatFunc& f);
  const std::map<uint32_t, RatFunc>& terms() const { return c_; }

  SuperScalar operator-() const;
  SuperScalar operator+(const SuperScalar& o) const;
  SuperScalar operator-(const SuperScalar& o) const;
  SuperScalar operator*(const SuperScalar& o) const;
  SuperScalar& operator+=(const SuperScalar& o) { return *this = *this + o; }
  SuperScalar& operator-=(const SuperScalar& o) { return *this = *this - o; }
  SuperScalar& operator*=(const SuperScalar& o) { return *this = *this * o; }
  bool operator==(const SuperScalar& o) const {
    return n_ == o.n_ && m_ == o.m_ && c_ == o.c_;
  }
  bool operator!=(const SuperScalar& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  int parity() const;  // 0 or 1; DomainError when mixed
  SuperScalar even_part() const;
  SuperScalar odd_part() const;
  SuperScalar shat() const;  // parity involution: negates the odd part

  SuperScalar tau(int i) const;    // partial derivative along x_i
  SuperScalar psi(int alpha) const;  // odd partial derivative

  std::string to_string(const std::vector<std::string>& xnames,
                        const std::vector<std::string>& pnames) const;

 private:
  int n_, m_;
  std::map<uint32_t, RatFunc> c_;
};

}  // namespace vaw
