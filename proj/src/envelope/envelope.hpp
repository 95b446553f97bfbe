#pragma once

#include <string>
#include <vector>

#include "algebroid/structure.hpp"

namespace vaw {

// Weight <= 1 element over one frame: a weight-0 scalar plus the weight-1
// splitting into a derivation part and a one-form part.
struct W1Element {
  SuperScalar scalar;
  SuperVector vec;
  SuperCovector cov;

  W1Element(int n = 0, int m = 0) : scalar(n, m), vec(n, m), cov(n, m) {}
  static W1Element from_scalar(const SuperScalar& s);
  static W1Element from_vector(const SuperVector& v);
  static W1Element from_covector(const SuperCovector& w);

  int n() const { return vec.n(); }
  int m() const { return vec.m(); }
  bool is_zero() const { return scalar.is_zero() && vec.is_zero() && cov.is_zero(); }
  W1Element operator-() const;
  W1Element operator+(const W1Element& o) const;
  W1Element operator-(const W1Element& o) const;
  bool operator==(const W1Element& o) const {
    return scalar == o.scalar && vec == o.vec && cov == o.cov;
  }
  bool operator!=(const W1Element& o) const { return !(*this == o); }
};

W1Element scalar_mul(const SuperScalar& f, const W1Element& u);

// Weight <= 2 element in normal form: a weight <= 1 part plus the formal
// weight-2 shapes indexed by the frame basis.  om1[s] holds the weight-1
// element u of the shape om_{s(-1)} u (its scalar part is never populated
// by the rewriting rules); om2[s] holds the scalar a of om_{s(-2)} a, which
// is the same normal form as the (-1)-product of the translate of om_s
// against a; rho1[mu] holds the pure odd-derivation combination v of
// rho_{mu(-1)} v; psi1[q] holds the pure even one-form combination w of
// psi_{q(-1)} w; dpart holds a weight-1 element under the formal translate
// (its scalar and even one-form slots are folded into w1 and om2).
// Equality is componentwise.
struct W2Element {
  W1Element w1;
  std::vector<W1Element> om1;
  std::vector<SuperScalar> om2;
  std::vector<SuperVector> rho1;
  std::vector<SuperCovector> psi1;
  W1Element dpart;

  W2Element(int n = 0, int m = 0);
  static W2Element from_w1(const W1Element& u);

  int n() const { return w1.n(); }
  int m() const { return w1.m(); }
  bool is_zero() const;
  // True when no weight-2 shape is populated.
  bool pure_w1() const;
  W2Element operator-() const;
  W2Element operator+(const W2Element& o) const;
  W2Element operator-(const W2Element& o) const;
  bool operator==(const W2Element& o) const;
  bool operator!=(const W2Element& o) const { return !(*this == o); }
};

// The (-1)-product of two weight <= 1 elements over a frame whose one-form
// map vanishes, rewritten into normal form by the tabulated rules:
//   scalar x:                x y - gamma(x, y-derivation-part)
//   one-form x, even slots:  om_{s(-1)}{a_{s(-1)} y} - (-1)^{p(a_s) p(y)}
//                            om_{s(-2)}{y(a_s)}     (y a pure derivation)
//   one-form x, odd slots:   rho_{mu(-1)}{a_mu y}   (y pure odd, all
//                            coefficients generator-free)
//   odd-derivation x:        psi_{q(-1)}{a_q y}     (y a pure even one-form
//                            with generator-free coefficients)
// Any shape outside this closure throws UnsupportedShape.
W2Element product_minus1(const Frame& F, const W1Element& x, const W1Element& y);

// The distinguished quadruple over a frame with equally many even and odd
// directions, where the odd generators transform as the even one-forms:
//   Q = phi_{i(-1)} tau_i   (odd, weight 1)
//   J = phi_{i(-1)} psi_i   (even, weight 1)
//   G = psi_{i(-1)} om_i    (odd, weight 2)
//   L = om_{i(-1)} tau_i + rho_{i(-1)} psi_i   (even, weight 2)
struct SusyQuadruple {
  std::string frame_id;
  W1Element Q, J;
  W2Element G, L;
};

SusyQuadruple build_susy(const Frame& F);

// Result of rewriting the quadruple of the destination frame in source
// data.  The weight-1 elements shift by closed one-form corrections; the
// weight-2 elements are invariant.  delta_q is the differential of
// q_potential.
struct SusyTransform {
  SusyQuadruple primed;
  W1Element delta_q, delta_j;
  W2Element delta_g, delta_l;  // identically zero; returned for the record
  SuperScalar q_potential;
};

// Computes the destination quadruple definitionally (primed generators fed
// through product_minus1) and checks it against the closed transformation
// laws; any disagreement throws Error.  The change must be holonomic with
// the odd factor inverse-transpose to the even one, and sq must be the
// quadruple of the source frame.
SusyTransform transform_susy(const SusyQuadruple& sq, const FrameChange& fc);

// Canonical derivation into weight 2.  The scalar part maps to its
// differential, even one-form slots need constant coefficients (their
// translates are the om2 shapes), everything else is kept formal in dpart.
W2Element d_op(const Frame& F, const W1Element& u);

// Fermionic charge: counts odd generators, with the odd derivation slots at
// -1 and the odd one-form slots at +1.  Throws DomainError when the element
// mixes charges; zero elements report charge 0.
int fermionic_charge(const W1Element& u);
int fermionic_charge(const W2Element& u);

// Conformal weight of a homogeneous element (0, 1 or 2); throws DomainError
// when weights mix; zero elements report 0.
int conformal_weight(const W1Element& u);
int conformal_weight(const W2Element& u);

// Diagonal actions of the weight-1 current's and the Virasoro element's
// zero modes: each monomial is scaled by its fermionic charge resp. its
// conformal weight.  Defined on generators and extended as derivations of
// the (-1)-product, which is exactly per-monomial scaling.
W1Element j0_apply(const W1Element& u);
W2Element j0_apply(const W2Element& u);
W1Element l0_apply(const W1Element& u);
W2Element l0_apply(const W2Element& u);

// Zero mode of the exact one-form a^{-1} da acting on a derivation-type
// element: -Lie_x(a^{-1} da) + d<x, a^{-1} da>.  Identically zero -- the
// operator attached to an exact logarithmic differential is trivial.
SuperCovector log_diff_zero_mode(const Frame& F, const RatFunc& a, const SuperVector& x);

}  // namespace vaw
