#pragma once

#include <string>
#include <vector>

#include "kernel/matrix.hpp"
#include "super/elements.hpp"

namespace vaw {

// A frame over one affine chart with even coordinates x_1..x_n and an odd
// bundle of rank m.  Row i of g0 expresses the i-th frame derivation in the
// coordinate derivations, and row a of A0 expresses the a-th odd frame
// generator in the chart's odd generators.  The base frame has g0 = A0 = 1.
//
// A frame carries its own calculus: the frame derivations act coefficient-wise
// on elements written in the frame's odd basis, and the odd slots contract the
// frame's own generators.  All such data stays expressed through the chart
// coordinates, so exact arithmetic applies throughout.
struct Frame {
  std::string id;
  int n = 0, m = 0;
  RatMatrix g0, A0;        // frame data relative to the chart
  RatMatrix g0inv, A0inv;  // cached inverses
  std::vector<RatFunc> coords;  // when induced by a coordinate map: the new coordinates
  bool holonomic = true;   // g0 rows commute as derivations (true for coordinate maps)

  static Frame base(int n, int m);
  // Frame induced by an invertible coordinate map y(x) together with a free
  // invertible odd transition A0; the even rows are the y-derivations.
  static Frame from_coords(const std::string& id, const std::vector<RatFunc>& new_coords,
                           const RatMatrix& A0);
  // Arbitrary matrix data; for exercising raw formulas.  Callers must say
  // whether the even rows commute.
  static Frame raw(const std::string& id, const RatMatrix& g0, const RatMatrix& A0,
                   bool holonomic);

  bool is_base() const { return g0.is_identity() && A0.is_identity(); }
};

// Calculus in a frame's own model.  For the base frame these agree with the
// plain coordinate operations.
RatFunc frame_deriv(const Frame& F, int q, const RatFunc& f);
RatMatrix frame_deriv_mat(const Frame& F, int q, const RatMatrix& M);
SuperScalar frame_tau(const Frame& F, int q, const SuperScalar& f);
SuperScalar frame_apply(const Frame& F, const SuperVector& v, const SuperScalar& f);
SuperVector frame_bracket(const Frame& F, const SuperVector& v, const SuperVector& w);
SuperCovector frame_dscalar(const Frame& F, const SuperScalar& f);
SuperCovector frame_lie_cov(const Frame& F, const SuperVector& v, const SuperCovector& w);

// Element of the direct sum of derivations and one-forms over one frame.
struct AlgebroidElement {
  SuperVector vec;
  SuperCovector cov;
  AlgebroidElement(int n = 0, int m = 0) : vec(n, m), cov(n, m) {}
  explicit AlgebroidElement(SuperVector v) : vec(std::move(v)), cov(vec.n(), vec.m()) {}
  explicit AlgebroidElement(SuperCovector w) : vec(w.n(), w.m()), cov(std::move(w)) {}
  AlgebroidElement(SuperVector v, SuperCovector w) : vec(std::move(v)), cov(std::move(w)) {}

  int n() const { return vec.n(); }
  int m() const { return vec.m(); }
  bool is_zero() const { return vec.is_zero() && cov.is_zero(); }
  AlgebroidElement operator-() const { return {-vec, -cov}; }
  AlgebroidElement operator+(const AlgebroidElement& o) const { return {vec + o.vec, cov + o.cov}; }
  AlgebroidElement operator-(const AlgebroidElement& o) const { return {vec - o.vec, cov - o.cov}; }
  bool operator==(const AlgebroidElement& o) const { return vec == o.vec && cov == o.cov; }
  bool operator!=(const AlgebroidElement& o) const { return !(*this == o); }
};

AlgebroidElement scalar_mul(const SuperScalar& f, const AlgebroidElement& x);

// Change of frame between two frames over the same chart.  The relative
// matrices express the destination frame through the source frame:
//   tau'_i = sum_q g(i,q) tau_q + sum_{al,ga} gmix[i](al,ga) phi_ga psi_al
//   phi'_al = sum_be A(al,be) phi_be
// with all derivatives taken by the source frame's derivations.  The mixed
// block gmix is forced by requiring the lifted derivations to act through the
// source model exactly as the destination derivations act in their own model.
struct FrameChange {
  Frame src, dst;
  RatMatrix g, ginv, A, Ainv;
  std::vector<RatMatrix> gmix;  // gmix[i](al, ga)
  bool holonomic = true;

  FrameChange(Frame source, Frame dest);

  // Destination basis written in source data.
  SuperVector tau_dst_in_src(int i) const;
  SuperVector psi_dst_in_src(int alpha) const;
  SuperCovector om_dst_in_src(int i) const;
  SuperCovector rho_dst_in_src(int alpha) const;
  // Source basis written in destination data.
  SuperVector tau_src_in_dst(int q) const;
  SuperVector psi_src_in_dst(int beta) const;
  SuperCovector om_src_in_dst(int j) const;
  SuperCovector rho_src_in_dst(int beta) const;

  // Sum over ga of gmix[i](ga, ga); enters the lifted scalar anomaly.
  RatFunc gmix_trace(int i) const;

  // Structural identities of the relative data.  The first three need a
  // holonomic change; the trace symmetries hold for any invertible A (the
  // mixed one still needs holonomic g).
  bool commutes_first_order() const;
  bool commutes_second_order() const;
  bool inverse_gradient_symmetry() const;
  bool odd_trace_symmetry() const;
  bool mixed_trace_symmetry() const;
};

enum class ChangeDir { forward, inverse };

// Rewrite a coefficient between the odd bases of the two frames.
SuperScalar transport_scalar(const FrameChange& fc, const SuperScalar& f, ChangeDir dir);

// Re-express an element given in source data in destination data (forward)
// or conversely (inverse).  Transport composed with its inverse is the
// identity, and the duality pairing is transport-invariant.
AlgebroidElement change_frame(const FrameChange& fc, const AlgebroidElement& x, ChangeDir dir);

}  // namespace vaw
