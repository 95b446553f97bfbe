#pragma once

#include <string>
#include <vector>

#include "kernel/matrix.hpp"
#include "super/scalar.hpp"

namespace vaw {

// Vector field on the superalgebra: left coefficients against the even
// derivations (slot i: along x_i) and the odd derivations (slot a).
struct SuperVector {
  std::vector<SuperScalar> a;  // even-derivation coefficients, size n
  std::vector<SuperScalar> b;  // odd-derivation coefficients, size m
  SuperVector(int n = 0, int m = 0)
      : a(n, SuperScalar(n, m)), b(m, SuperScalar(n, m)) {}
  static SuperVector unit_tau(int n, int m, int i);
  static SuperVector unit_psi(int n, int m, int alpha);

  int n() const { return static_cast<int>(a.size()); }
  int m() const { return static_cast<int>(b.size()); }
  bool is_zero() const;
  SuperVector operator-() const;
  SuperVector operator+(const SuperVector& o) const;
  SuperVector operator-(const SuperVector& o) const;
  bool operator==(const SuperVector& o) const { return a == o.a && b == o.b; }
  bool operator!=(const SuperVector& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  int parity() const;  // of a homogeneous field; 0 for zero
  SuperVector even_part() const;
  SuperVector odd_part() const;
};

// One-form: left coefficients against the dual basis (slot i: dual to the
// even derivation i, slot a: dual to the odd derivation a).
struct SuperCovector {
  std::vector<SuperScalar> c;  // size n
  std::vector<SuperScalar> d;  // size m
  SuperCovector(int n = 0, int m = 0)
      : c(n, SuperScalar(n, m)), d(m, SuperScalar(n, m)) {}
  static SuperCovector unit_om(int n, int m, int i);
  static SuperCovector unit_rho(int n, int m, int alpha);

  int n() const { return static_cast<int>(c.size()); }
  int m() const { return static_cast<int>(d.size()); }
  bool is_zero() const;
  SuperCovector operator-() const;
  SuperCovector operator+(const SuperCovector& o) const;
  SuperCovector operator-(const SuperCovector& o) const;
  bool operator==(const SuperCovector& o) const { return c == o.c && d == o.d; }
  bool operator!=(const SuperCovector& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  int parity() const;
  SuperCovector even_part() const;
  SuperCovector odd_part() const;
};

// v acting on a function.
SuperScalar apply(const SuperVector& v, const SuperScalar& f);

// Left multiplication by a function, componentwise on either side of the
// duality; all parity bookkeeping happens inside the pairing instead.
SuperVector scalar_mul(const SuperScalar& f, const SuperVector& v);
SuperCovector scalar_mul(const SuperScalar& f, const SuperCovector& w);

// Right module action on one-forms, normalized against the pairing:
//   pairing(v, scalar_mul_right(w, f)) == pairing(v, w) * f   for all v.
SuperCovector scalar_mul_right(const SuperCovector& w, const SuperScalar& f);

// Supercommutator, determined by the action on the coordinate generators.
SuperVector bracket(const SuperVector& v, const SuperVector& w);

// Duality pairing <v, w>; the odd half carries the parity involution.
SuperScalar pairing(const SuperVector& v, const SuperCovector& w);

// Universal derivation into one-forms: <v, dscalar(f)> == apply(v, f).
SuperCovector dscalar(const SuperScalar& f);

// Lie action of a vector field on a one-form, fixed by the duality rule
//   v<e, w> = <[v, e], w> + (-1)^{p(v)p(e)} <e, lie_cov(v, w)>.
SuperCovector lie_cov(const SuperVector& v, const SuperCovector& w);

// Variants of the four operations above for a frame whose even derivations
// are linear combinations of the coordinate ones: slot q stands for
// sum_p W(q, p) d/dx_p, acting coefficient-wise on the odd generators, while
// the odd slots keep their meaning.  The duality pairing needs no variant:
// its component formula is the same in every frame.
SuperScalar apply(const RatMatrix& W, const SuperVector& v, const SuperScalar& f);
SuperVector bracket(const RatMatrix& W, const SuperVector& v, const SuperVector& w);
SuperCovector dscalar(const RatMatrix& W, const SuperScalar& f);
SuperCovector lie_cov(const RatMatrix& W, const SuperVector& v, const SuperCovector& w);

std::string to_string(const SuperVector& v, const std::vector<std::string>& xnames,
                      const std::vector<std::string>& pnames);
std::string to_string(const SuperCovector& w, const std::vector<std::string>& xnames,
                      const std::vector<std::string>& pnames);

}  // namespace vaw
