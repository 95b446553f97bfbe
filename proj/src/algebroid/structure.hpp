#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebroid/frame.hpp"

namespace vaw {

// Chart-local structure on the sum of derivations and one-forms over a frame:
// a scalar anomaly gamma (one-form valued, measures how multiplying a
// derivation by a function twists the product), a symmetric bilinear pairing
// (scalar valued, zero on two one-forms), and a skew anomaly c (one-form
// valued).  Each map is defined by closed formulas on frame-basis terms whose
// coefficients carry at most one odd generator, extends additively, and
// throws UnsupportedShape on coefficient shapes outside that table.
//
// Term shapes and their values, writing t_i for the frame derivations, s_a
// for the odd slots, D for the frame differential, and juxtaposition for the
// left module action (a, b carry no odd generator unless stated):
//   gamma(a, b t_i)        = -t_i(a) Db - t_i(b) Da      (a may carry one phi)
//   gamma(a, b s_mu)       = 0
//   gamma(a, b phi_nu s_mu)  adds  b Da                  when nu == mu
//   gamma(a phi_be, b s_mu)  adds  a Db                  when be == mu
//   gamma(a phi_r, b phi_s s_mu) adds -a D(b phi_s) for r == mu and
//                                     +b D(a phi_r) for s == mu
//   <a t_i, b t_j>         = -b t_i t_j(a) - a t_j t_i(b) - t_i(b) t_j(a)
//   <a phi_al s_be, b t_i> = b t_i(a)                    when al == be
//   <a phi_al s_be, b phi_ga s_de> = a b                 when be == ga, de == al
//   <b s_mu, anything of derivation type> = 0
//   c(a t_i, b t_j)        = 1/2 { t_i(b) D t_j(a) - t_j(a) D t_i(b) }
//                          + 1/2 D { b t_i t_j(a) - a t_j t_i(b) }
//   c(a phi_al s_mu, b phi_be s_nu) = 1/2 { a Db - b Da } when mu == be, nu == al
//   c(a phi_al s_mu, b t_i) = -1/2 D { b t_i(a) }         when mu == al
//   c(x, b s_mu) = 0; one-form parts contribute zero to gamma and c.
// The pairing is supersymmetric, c is skew-supersymmetric, and between a
// derivation part and a one-form part the pairing is the frame duality.
struct VertexAlgebroidStructure {
  Frame frame;
  bool corrupt_c = false;  // test hook: perturb the skew anomaly

  explicit VertexAlgebroidStructure(Frame F) : frame(std::move(F)) {}

  SuperCovector gamma_eval(const SuperScalar& a, const SuperVector& t) const;
  SuperCovector gamma_eval(const SuperScalar& a, const AlgebroidElement& t) const;
  SuperScalar pairing_eval(const AlgebroidElement& x, const AlgebroidElement& y) const;
  SuperCovector c_eval(const SuperVector& x, const SuperVector& y) const;
  SuperCovector c_eval(const AlgebroidElement& x, const AlgebroidElement& y) const;

  // Residuals of the structure laws; each is identically zero on homogeneous
  // arguments within the tabulated shapes.  p() below is the parity.
  //
  // gamma(a, b t) - gamma(ab, t) + a gamma(b, t)
  //   + (-1)^{p(t)(p(a)+p(b))} t(a) Db
  //   + (-1)^{p(a)p(b) + p(t)p(a) + p(t)p(b)} t(b) Da
  SuperCovector residual_gamma_module(const SuperScalar& a, const SuperScalar& b,
                                      const SuperVector& t) const;
  // <a t1, t2> - a <t1, t2> - <gamma(a, t1), t2>
  //   + (-1)^{p(a)(p(t1)+p(t2))} t1 t2 (a)
  SuperScalar residual_pairing_module(const SuperScalar& a, const SuperVector& t1,
                                      const SuperVector& t2) const;
  // c(a t1, t2) - a c(t1, t2) - gamma(a, [t1, t2])
  //   + (-1)^{p(t2)(p(t1)+p(a))} { gamma(t2(a), t1) - t2 . gamma(a, t1)
  //                                + 1/2 D<t2, gamma(a, t1)> }
  //   + (-1)^{p(a)(p(t1)+p(t2))} { 1/2 <t1, t2> Da - 1/2 D(t1 t2 (a)) }
  SuperCovector residual_c_module(const SuperScalar& a, const SuperVector& t1,
                                  const SuperVector& t2) const;
  // <[t1,t2], t3> + (-1)^{p(t1)p(t2)} <t2, [t1,t3]>
  //   - t1<t2,t3> + (-1)^{p(t1)p(t2)} 1/2 t2<t1,t3>
  //   + (-1)^{p(t3)(p(t1)+p(t2))} 1/2 t3<t1,t2>
  //   - (-1)^{p(t1)p(t2)} <t2, c(t1,t3)> - (-1)^{p(t3)(p(t1)+p(t2))} <t3, c(t1,t2)>
  SuperScalar residual_pairing_invariance(const SuperVector& t1, const SuperVector& t2,
                                          const SuperVector& t3) const;
  // (Lie differential of c)(t1,t2,t3) + 1/2 D of the bracket-pairing brace;
  // the Lie differential acts on one-forms through the frame's Lie action.
  SuperCovector residual_c_closure(const SuperVector& t1, const SuperVector& t2,
                                   const SuperVector& t3) const;
};

struct AxiomCheck {
  std::string label;    // catalog label of the law ("A1".."A5")
  bool ok = false;
  int samples = 0;
  std::string witness;  // first failing tuple, printed; empty when ok
};

// Seeded residual sweep over all five laws.  Arguments are drawn inside the
// tabulated shapes, rotating parity patterns so every sign branch is hit.
// Deterministic in (structure, seed, samples).
std::vector<AxiomCheck> verify_axioms(const VertexAlgebroidStructure& S, uint64_t seed,
                                      int samples);

}  // namespace vaw
