#include <vector>

#include "doctest.h"

#include "cocycles/cocycles.hpp"
#include "kernel/error.hpp"
#include "super/elements.hpp"

using namespace vaw;

namespace {

RatFunc rx(int n, int i) { return RatFunc::variable(n, i); }
RatFunc rc(int n, long k) { return RatFunc::constant(n, Rational(k)); }

bool rf_eq(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

// Unimodular 2x2 factor assembled from elementary shears; the inverse stays
// polynomial, which keeps exact arithmetic cheap.
RatMatrix sl2(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  const int nv = a.nvars();
  RatMatrix m(2, 2, nv);
  m.at(0, 0) = rc(nv, 1) + a * b;
  m.at(0, 1) = c + a + a * b * c;
  m.at(1, 0) = b;
  m.at(1, 1) = rc(nv, 1) + b * c;
  return m;
}

// Four frames over a three-variable chart with two odd directions.  Shear
// coordinate maps and unimodular odd factors are dense enough that all
// pairwise degree-3 forms are nonzero, yet every inverse is polynomial.
struct ShearSystem {
  Frame F0, F1, F2, F3;
};

ShearSystem shear_system() {
  const int nv = 3;
  const RatFunc x1 = rx(nv, 0), x2 = rx(nv, 1), x3 = rx(nv, 2);
  const BundleSpec gen = BundleSpec::general();
  const RatMatrix A0 = RatMatrix::identity(2, nv);
  const RatMatrix A1 = sl2(x1, x2, x3);
  const RatMatrix A2 = sl2(x3, x1, x2);
  const RatMatrix A3 = sl2(rc(nv, 0), x2, x1);
  ShearSystem s{gen.frame("g0", {x1, x2, x3}, &A0),
                gen.frame("g1", {x1 + x2 * x2, x2, x3}, &A1),
                gen.frame("g2", {x1, x2 + x3 * x3, x3}, &A2),
                gen.frame("g3", {x1 + x3 * x3, x2, x3}, &A3)};
  return s;
}

// Group-valued log-derivative traces used by the transpose-inverse
// identities below (all derivations are coordinate partials).
RatFunc trip(const Frame& B, const RatMatrix& M, int i, int j, int r) {
  const RatMatrix Mi = M.inverse();
  const RatMatrix Li = Mi * frame_deriv_mat(B, i, M);
  const RatMatrix Lj = Mi * frame_deriv_mat(B, j, M);
  const RatMatrix Lr = Mi * frame_deriv_mat(B, r, M);
  return (Li * Lj * Lr).trace();
}

RatFunc two(const Frame& B, const RatMatrix& M, const RatMatrix& N, int i, int j) {
  return (M.inverse() * frame_deriv_mat(B, i, M) * frame_deriv_mat(B, j, N) * N.inverse())
      .trace();
}

}  // namespace

TEST_CASE("map of the inverse-coordinate line chart") {
  const int n = 1;
  const RatFunc x = rx(n, 0);
  const BundleSpec tan = BundleSpec::tangent();
  const Frame F = tan.frame("y", {rc(n, 1) / x});
  const FrameChange fc(Frame::base(n, 1), F);
  const HMap h = h_of_change(fc, tan);

  // g = -x^2; both routes give the constant -4, all of it from the even
  // factor.
  CHECK(rf_eq(h.full.at(0, 0), rc(n, -4)));
  CHECK(rf_eq(h.from_even.at(0, 0), rc(n, -4)));
  CHECK(h.from_odd.at(0, 0).is_zero());
  CHECK(hmap_defining_condition(fc, h));

  // The lifted odd basis is sent to zero.
  CHECK(hmap_apply(fc, h, SuperVector::unit_psi(n, 1, 0)).is_zero());
}

TEST_CASE("shortcut for frames that reuse the even factor") {
  // When the odd factor equals the even one, the map collapses to twice the
  // second derivatives of the transition matrix.
  const BundleSpec tan = BundleSpec::tangent();

  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const Frame B = Frame::base(n, n);
  const Frame F = tan.frame("w", {x1 + x2 * x2 * x2, x2 + x1 * x1});
  const FrameChange fc(B, F);
  const HMap h = h_of_change(fc, tan);
  CHECK(hmap_defining_condition(fc, h));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc want = rc(n, 0);
      for (int p = 0; p < n; ++p)
        want = want + rc(n, 2) * frame_deriv(B, p, frame_deriv(B, j, fc.g.at(i, p)));
      CHECK(rf_eq(h.full.at(i, j), want));
    }
}

TEST_CASE("identity change has the zero map") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const BundleSpec tan = BundleSpec::tangent();
  const Frame F = tan.frame("id", {x1, x2});
  const FrameChange fc(Frame::base(n, n), F);
  const HMap h = h_of_change(fc, tan);
  CHECK(h.full == RatMatrix(n, n, n));
  CHECK(h.from_even == RatMatrix(n, n, n));
  CHECK(h.from_odd == RatMatrix(n, n, n));
  CHECK(b_of_change(fc, tan).is_zero());
}

TEST_CASE("inverse-transpose odd factor cancels the map") {
  const int n = 1;
  const RatFunc x = rx(n, 0);
  const BundleSpec cot = BundleSpec::cotangent();
  const Frame F = cot.frame("y", {rc(n, 1) / x});
  const FrameChange fc(Frame::base(n, 1), F);
  const HMap h = h_of_change(fc, cot);

  // The two parts coincide, so the full map vanishes while neither part does.
  CHECK(h.full.at(0, 0).is_zero());
  CHECK(rf_eq(h.from_even.at(0, 0), rc(n, -4)));
  CHECK(rf_eq(h.from_odd.at(0, 0), rc(n, -4)));
  CHECK(hmap_defining_condition(fc, h));
}

TEST_CASE("dual factor flips the mixed-trace term") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const BundleSpec gen = BundleSpec::general();
  const RatMatrix A = sl2(x1, x2, rc(n, 0));
  const Frame B = Frame::base(n, 2);
  const Frame F = gen.frame("w", {x1 + x2 * x2, x2}, &A);
  const Frame Fd = dual_frame(F);
  const FrameChange fc(B, F), fcd(B, Fd);

  const HMap h = h_of_change(fc, gen);
  const HMap hd = h_of_change(fcd, gen);
  CHECK(hmap_defining_condition(fc, h));
  CHECK(hmap_defining_condition(fcd, hd));

  // Replacing the odd factor by its inverse transpose negates the mixed
  // trace and keeps the quadratic trace term, so the even parts agree and
  // the odd parts differ by twice the derivative of the mixed trace.
  CHECK(h.from_even == hd.from_even);
  for (int i = 0; i < n; ++i) {
    CHECK(rf_eq(fcd.gmix_trace(i), -fc.gmix_trace(i)));
    for (int j = 0; j < n; ++j)
      CHECK(rf_eq(h.from_odd.at(i, j) - hd.from_odd.at(i, j),
                  rc(n, 2) * frame_deriv(B, j, fc.gmix_trace(i))));
  }
}

TEST_CASE("log-derivative traces under transpose-inverse") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const Frame B = Frame::base(n, 1);
  const RatMatrix A = sl2(x1, x2, x1 * x2);
  const RatMatrix Bm = sl2(x2, x1 + x2, x1);
  const RatMatrix C = A.inverse().transpose();
  const RatMatrix D = Bm.inverse().transpose();

  // Triple products reverse their order and flip sign; mixed two-factor
  // products are invariant.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) CHECK(rf_eq(trip(B, C, i, j, r), -trip(B, A, r, j, i)));
      CHECK(rf_eq(two(B, C, D, i, j), two(B, A, Bm, i, j)));
    }
}

TEST_CASE("forms vanish when the odd factor follows the coordinates") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);

  for (const BundleSpec& spec : {BundleSpec::tangent(), BundleSpec::cotangent()}) {
    const Frame B = Frame::base(n, n);
    const Frame Fu = spec.frame("u", {x1 + x2 * x2, x2});
    const Frame Fv = spec.frame("v", {x1, x2 + x1 * x1});
    const FrameChange fc1(B, Fu), fc2(Fu, Fv);
    CHECK(b_of_change(fc1, spec).is_zero());
    CHECK(b_of_change(fc2, spec).is_zero());
    CHECK(a_of_triple(fc1, fc2, spec).is_zero());
  }

  // One even direction leaves no room for a degree-3 form either.
  const int n1 = 1;
  const RatFunc x = rx(n1, 0);
  const BundleSpec tan = BundleSpec::tangent();
  const Frame F = tan.frame("y", {rc(n1, 1) / x});
  CHECK(b_of_change(FrameChange(Frame::base(n1, 1), F), tan).is_zero());
}

TEST_CASE("degree-3 form of a unimodular shear system") {
  const ShearSystem s = shear_system();
  const BundleSpec gen = BundleSpec::general();
  const FrameChange fc01(s.F0, s.F1);

  const PolyForm b = b_of_change(fc01, gen);
  CHECK(!b.is_zero());
  CHECK(b.d().is_zero());

  // Coordinate changes contribute nothing through their even factor, so the
  // whole form is the odd-factor part (which enters with opposite sign).
  CHECK((b + b_odd_part(fc01)).is_zero());

  // A change between two non-coordinate frames satisfies the defining
  // relation of its map as well.
  const FrameChange fc12(s.F1, s.F2);
  CHECK(hmap_defining_condition(fc12, h_of_change(fc12, gen)));
}

TEST_CASE("degree-2 form telescopes away on degenerate triples") {
  const ShearSystem s = shear_system();
  const BundleSpec gen = BundleSpec::general();
  const FrameChange fc01(s.F0, s.F1);
  const FrameChange fc11(s.F1, s.F1);
  const FrameChange fc12(s.F1, s.F2);

  CHECK(a_of_triple(fc01, fc11, gen).is_zero());
  CHECK(a_of_triple(fc11, fc12, gen).is_zero());

  const CocyclePair pair = cocycle_pair(fc01, fc12, gen);
  CHECK(!pair.a.is_zero());
  CHECK(pair.b == b_of_change(fc01, gen));
}

TEST_CASE("duality leaves both forms unchanged") {
  const ShearSystem s = shear_system();
  const DualReport rep = dual_compare(s.F0, s.F1, s.F2);
  CHECK(rep.b_parts_equal);
  CHECK(rep.a_parts_equal);

  // With identity odd factors the odd-factor parts vanish outright.
  const int n = 3;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1), x3 = rx(n, 2);
  const BundleSpec gen = BundleSpec::general();
  const RatMatrix I2 = RatMatrix::identity(2, n);
  const Frame G0 = gen.frame("p0", {x1, x2, x3}, &I2);
  const Frame G1 = gen.frame("p1", {x1 + x2 * x2, x2, x3}, &I2);
  CHECK(b_odd_part(FrameChange(G0, G1)).is_zero());
}

TEST_CASE("consistency of a four-frame system") {
  const ShearSystem s = shear_system();
  const auto checks = cech_consistency({s.F0, s.F1, s.F2, s.F3}, BundleSpec::general());

  // Six pair closures, four triple pair-sums, one four-frame alternation.
  CHECK(checks.size() == 11);
  for (const auto& c : checks) {
    CAPTURE(c.label);
    CHECK(!c.label.empty());
    CHECK(c.ok);
  }
}

TEST_CASE("consistency of a degenerate coordinate-only system") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const BundleSpec tan = BundleSpec::tangent();
  const std::vector<Frame> frames = {tan.frame("q0", {x1, x2}),
                                     tan.frame("q1", {x1 + x2 * x2, x2}),
                                     tan.frame("q2", {x1, x2 + x1 * x1}),
                                     tan.frame("q3", {x1 + x2, x2})};
  for (const auto& c : cech_consistency(frames, tan)) {
    CAPTURE(c.label);
    CHECK(c.ok);
  }
}

TEST_CASE("invalid inputs are rejected") {
  const int n = 2;
  const RatFunc x1 = rx(n, 0), x2 = rx(n, 1);
  const BundleSpec tan = BundleSpec::tangent();
  const BundleSpec gen = BundleSpec::general();

  // A frame not declared holonomic cannot carry the map.
  RatMatrix g0 = RatMatrix::identity(n, n);
  g0.at(0, 1) = x2;
  const Frame Fraw = Frame::raw("raw", g0, RatMatrix::identity(2, n), false);
  CHECK_THROWS_AS(h_of_change(FrameChange(Frame::base(n, 2), Fraw), gen), DomainError);

  // The odd factor must match the declared kind.
  const RatMatrix A = sl2(x1, x2, rc(n, 0));
  const Frame Fg = gen.frame("g", {x1 + x2 * x2, x2}, &A);
  CHECK_THROWS_AS(h_of_change(FrameChange(Frame::base(n, 2), Fg), tan), DomainError);

  // The general kind needs an explicit odd factor.
  CHECK_THROWS_AS(gen.frame("bare", {x1, x2}), DomainError);

  // Degree-2 forms need a composable pair of changes.
  const ShearSystem s = shear_system();
  CHECK_THROWS_AS(a_of_triple(FrameChange(s.F0, s.F1), FrameChange(s.F2, s.F3), gen),
                  DomainError);

  // The system sweep needs at least four frames.
  CHECK_THROWS_AS(cech_consistency({s.F0, s.F1, s.F2}, gen), DomainError);
}

TEST_CASE("map extension rejects unsupported coefficients") {
  const ShearSystem s = shear_system();
  const BundleSpec gen = BundleSpec::general();
  const FrameChange fc(s.F0, s.F1);
  const HMap h = h_of_change(fc, gen);
  const int n = 3, m = 2;

  // Even-slot coefficients must be generator-free.
  const SuperVector bad_even =
      scalar_mul(SuperScalar::phi(n, m, 0), SuperVector::unit_tau(n, m, 0));
  CHECK_THROWS_AS(hmap_apply(fc, h, bad_even), UnsupportedShape);

  // Odd-slot coefficients carry at most one generator.
  SuperScalar phiphi(n, m);
  phiphi.add_term(0b11u, rc(n, 1));
  const SuperVector bad_odd = scalar_mul(phiphi, SuperVector::unit_psi(n, m, 0));
  CHECK_THROWS_AS(hmap_apply(fc, h, bad_odd), UnsupportedShape);
}
