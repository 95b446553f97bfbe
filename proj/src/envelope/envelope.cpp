#include "envelope/envelope.hpp"

#include <bit>

#include "kernel/error.hpp"

namespace vaw {

namespace {

bool generator_free(const SuperScalar& s) {
  for (const auto& [mask, f] : s.terms())
    if (mask != 0) return false;
  return true;
}

SuperScalar int_scale(const SuperScalar& s, int k) {
  if (k == 0) return SuperScalar(s.n(), s.m());
  SuperScalar r(s.n(), s.m());
  for (const auto& [mask, f] : s.terms())
    r.add_term(mask, f * RatFunc::constant(f.nvars(), Rational(k)));
  return r;
}

// Scales every monomial by its fermionic charge (generator count plus the
// slot offset).
SuperScalar charge_scale(const SuperScalar& s, int offset) {
  SuperScalar r(s.n(), s.m());
  for (const auto& [mask, f] : s.terms()) {
    const int q = std::popcount(mask) + offset;
    if (q == 0) continue;
    r.add_term(mask, f * RatFunc::constant(f.nvars(), Rational(q)));
  }
  return r;
}

struct ChargeAcc {
  bool any = false;
  int q = 0;
  void add(const SuperScalar& s, int offset) {
    for (const auto& [mask, f] : s.terms()) {
      if (f.is_zero()) continue;
      const int c = std::popcount(mask) + offset;
      if (!any) {
        any = true;
        q = c;
      } else if (q != c) {
        throw DomainError("fermionic_charge: element mixes charges");
      }
    }
  }
  void add_w1(const W1Element& u, int extra) {
    add(u.scalar, extra);
    for (int p = 0; p < u.n(); ++p) add(u.vec.a[p], extra);
    for (int nu = 0; nu < u.m(); ++nu) add(u.vec.b[nu], extra - 1);
    for (int s = 0; s < u.n(); ++s) add(u.cov.c[s], extra);
    for (int mu = 0; mu < u.m(); ++mu) add(u.cov.d[mu], extra + 1);
  }
};

}  // namespace

W1Element W1Element::from_scalar(const SuperScalar& s) {
  W1Element u(s.n(), s.m());
  u.scalar = s;
  return u;
}

W1Element W1Element::from_vector(const SuperVector& v) {
  W1Element u(v.n(), v.m());
  u.vec = v;
  return u;
}

W1Element W1Element::from_covector(const SuperCovector& w) {
  W1Element u(w.n(), w.m());
  u.cov = w;
  return u;
}

W1Element W1Element::operator-() const {
  W1Element r(n(), m());
  r.scalar = -scalar;
  r.vec = -vec;
  r.cov = -cov;
  return r;
}

W1Element W1Element::operator+(const W1Element& o) const {
  W1Element r(n(), m());
  r.scalar = scalar + o.scalar;
  r.vec = vec + o.vec;
  r.cov = cov + o.cov;
  return r;
}

W1Element W1Element::operator-(const W1Element& o) const { return *this + (-o); }

W1Element scalar_mul(const SuperScalar& f, const W1Element& u) {
  W1Element r(u.n(), u.m());
  r.scalar = f * u.scalar;
  r.vec = scalar_mul(f, u.vec);
  r.cov = scalar_mul(f, u.cov);
  return r;
}

W2Element::W2Element(int n, int m)
    : w1(n, m),
      om1(n, W1Element(n, m)),
      om2(n, SuperScalar(n, m)),
      rho1(m, SuperVector(n, m)),
      psi1(m, SuperCovector(n, m)),
      dpart(n, m) {}

W2Element W2Element::from_w1(const W1Element& u) {
  W2Element r(u.n(), u.m());
  r.w1 = u;
  return r;
}

bool W2Element::is_zero() const { return w1.is_zero() && pure_w1(); }

bool W2Element::pure_w1() const {
  for (const auto& u : om1)
    if (!u.is_zero()) return false;
  for (const auto& s : om2)
    if (!s.is_zero()) return false;
  for (const auto& v : rho1)
    if (!v.is_zero()) return false;
  for (const auto& w : psi1)
    if (!w.is_zero()) return false;
  return dpart.is_zero();
}

W2Element W2Element::operator-() const {
  W2Element r(n(), m());
  r.w1 = -w1;
  for (int s = 0; s < n(); ++s) {
    r.om1[s] = -om1[s];
    r.om2[s] = -om2[s];
  }
  for (int mu = 0; mu < m(); ++mu) {
    r.rho1[mu] = -rho1[mu];
    r.psi1[mu] = -psi1[mu];
  }
  r.dpart = -dpart;
  return r;
}

W2Element W2Element::operator+(const W2Element& o) const {
  W2Element r(n(), m());
  r.w1 = w1 + o.w1;
  for (int s = 0; s < n(); ++s) {
    r.om1[s] = om1[s] + o.om1[s];
    r.om2[s] = om2[s] + o.om2[s];
  }
  for (int mu = 0; mu < m(); ++mu) {
    r.rho1[mu] = rho1[mu] + o.rho1[mu];
    r.psi1[mu] = psi1[mu] + o.psi1[mu];
  }
  r.dpart = dpart + o.dpart;
  return r;
}

W2Element W2Element::operator-(const W2Element& o) const { return *this + (-o); }

bool W2Element::operator==(const W2Element& o) const {
  if (!(w1 == o.w1) || !(dpart == o.dpart)) return false;
  for (int s = 0; s < n(); ++s)
    if (!(om1[s] == o.om1[s]) || !(om2[s] == o.om2[s])) return false;
  for (int mu = 0; mu < m(); ++mu)
    if (!(rho1[mu] == o.rho1[mu]) || !(psi1[mu] == o.psi1[mu])) return false;
  return true;
}

W2Element product_minus1(const Frame& F, const W1Element& x, const W1Element& y) {
  const int n = F.n, m = F.m;
  W2Element r(n, m);
  if (x.is_zero() || y.is_zero()) return r;

  const bool xs = !x.scalar.is_zero();
  const bool xv = !x.vec.is_zero();
  const bool xc = !x.cov.is_zero();
  if (int(xs) + int(xv) + int(xc) > 1)
    throw UnsupportedShape("product_minus1: left factor mixes weight splittings");

  const VertexAlgebroidStructure S(F);

  if (xs) {
    // a_{(-1)} y = a y - gamma(a, y); one-form parts of y see the plain
    // module action.
    r.w1.scalar = x.scalar * y.scalar;
    r.w1.vec = scalar_mul(x.scalar, y.vec);
    r.w1.cov = scalar_mul(x.scalar, y.cov) - S.gamma_eval(x.scalar, y.vec);
    return r;
  }

  if (xc) {
    if (!y.scalar.is_zero() || !y.cov.is_zero())
      throw UnsupportedShape("product_minus1: one-form left factor needs a derivation right factor");
    const int py = y.vec.parity();
    for (int s = 0; s < n; ++s) {
      const SuperScalar& a = x.cov.c[s];
      if (a.is_zero()) continue;
      W1Element u(n, m);
      u.vec = scalar_mul(a, y.vec);
      u.cov = -S.gamma_eval(a, y.vec);
      r.om1[s] = r.om1[s] + u;
      const SuperScalar act = frame_apply(F, y.vec, a);
      r.om2[s] = r.om2[s] + ((a.parity() & py & 1) ? act : -act);
    }
    for (int mu = 0; mu < m; ++mu) {
      const SuperScalar& b = x.cov.d[mu];
      if (b.is_zero()) continue;
      if (!generator_free(b))
        throw UnsupportedShape("product_minus1: odd one-form coefficient carries generators");
      for (int p = 0; p < n; ++p)
        if (!y.vec.a[p].is_zero())
          throw UnsupportedShape("product_minus1: odd one-form against an even derivation");
      for (int nu = 0; nu < m; ++nu)
        if (!generator_free(y.vec.b[nu]))
          throw UnsupportedShape("product_minus1: odd derivation coefficient carries generators");
      r.rho1[mu] = r.rho1[mu] + scalar_mul(b, y.vec);
    }
    return r;
  }

  // Odd-derivation left factor against an even one-form right factor.
  for (int p = 0; p < n; ++p)
    if (!x.vec.a[p].is_zero())
      throw UnsupportedShape("product_minus1: even derivation left factor is outside the closure");
  if (!y.scalar.is_zero() || !y.vec.is_zero())
    throw UnsupportedShape("product_minus1: derivation left factor needs a one-form right factor");
  for (int mu = 0; mu < m; ++mu)
    if (!y.cov.d[mu].is_zero())
      throw UnsupportedShape("product_minus1: odd one-form slots on the right factor");
  for (int s = 0; s < n; ++s)
    if (!generator_free(y.cov.c[s]))
      throw UnsupportedShape("product_minus1: one-form coefficient carries generators");
  for (int q = 0; q < m; ++q) {
    const SuperScalar& a = x.vec.b[q];
    if (a.is_zero()) continue;
    r.psi1[q] = r.psi1[q] + scalar_mul(a, y.cov);
  }
  return r;
}

SusyQuadruple build_susy(const Frame& F) {
  const int n = F.n, m = F.m;
  if (n != m)
    throw DomainError("build_susy: needs equally many even and odd directions");
  SusyQuadruple sq{F.id, W1Element(n, m), W1Element(n, m), W2Element(n, m),
                   W2Element(n, m)};
  for (int i = 0; i < n; ++i) {
    sq.Q.vec.a[i] = SuperScalar::phi(n, m, i);
    sq.J.vec.b[i] = SuperScalar::phi(n, m, i);
    sq.G.psi1[i] = SuperCovector::unit_om(n, m, i);
    sq.L.om1[i] = W1Element::from_vector(SuperVector::unit_tau(n, m, i));
    sq.L.rho1[i] = SuperVector::unit_psi(n, m, i);
  }
  return sq;
}

SusyTransform transform_susy(const SusyQuadruple& sq, const FrameChange& fc) {
  if (!fc.holonomic)
    throw DomainError("transform_susy: the change of frame must be holonomic");
  if (!(fc.A == fc.ginv.transpose()))
    throw DomainError(
        "transform_susy: odd factor must be the inverse transpose of the even factor");
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  if (n != m) throw DomainError("transform_susy: needs equally many even and odd directions");
  if (sq.frame_id != S.id)
    throw DomainError("transform_susy: quadruple was not built on the source frame");

  // Destination generators in source data.
  std::vector<SuperScalar> phi_p(n, SuperScalar(n, m));
  for (int i = 0; i < n; ++i)
    for (int be = 0; be < m; ++be) phi_p[i].add_term(1u << be, fc.A.at(i, be));

  W2Element Qp(n, m), Jp(n, m), Gp(n, m), Lp(n, m);
  for (int i = 0; i < n; ++i) {
    const W1Element phi_w = W1Element::from_scalar(phi_p[i]);
    Qp = Qp + product_minus1(S, phi_w, W1Element::from_vector(fc.tau_dst_in_src(i)));
    Jp = Jp + product_minus1(S, phi_w, W1Element::from_vector(fc.psi_dst_in_src(i)));
    Gp = Gp + product_minus1(S, W1Element::from_vector(fc.psi_dst_in_src(i)),
                             W1Element::from_covector(fc.om_dst_in_src(i)));
    Lp = Lp + product_minus1(S, W1Element::from_covector(fc.om_dst_in_src(i)),
                             W1Element::from_vector(fc.tau_dst_in_src(i)));
    Lp = Lp + product_minus1(S, W1Element::from_covector(fc.rho_dst_in_src(i)),
                             W1Element::from_vector(fc.psi_dst_in_src(i)));
  }

  // Closed transformation laws.
  SuperScalar q_potential(n, m);
  for (int r = 0; r < n; ++r)
    q_potential.add_term(1u << r, (fc.ginv * frame_deriv_mat(S, r, fc.g)).trace());
  const W1Element dq_closed = W1Element::from_covector(frame_dscalar(S, q_potential));

  SuperCovector trace_form(n, m);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      trace_form = trace_form + scalar_mul(SuperScalar::from_ratfunc(fc.ginv.at(p, i), m),
                                           frame_dscalar(S, SuperScalar::from_ratfunc(
                                                                fc.g.at(i, p), m)));
  const W1Element dj_closed = W1Element::from_covector(-trace_form);

  if (!(Qp == W2Element::from_w1(sq.Q + dq_closed)))
    throw Error("transform_susy: weight-1 odd law disagrees");
  if (!(Jp == W2Element::from_w1(sq.J + dj_closed)))
    throw Error("transform_susy: weight-1 even law disagrees");
  if (!(Gp == sq.G)) throw Error("transform_susy: weight-2 odd law disagrees");
  if (!(Lp == sq.L)) throw Error("transform_susy: weight-2 even law disagrees");

  SusyTransform out{SusyQuadruple{fc.dst.id, Qp.w1, Jp.w1, Gp, Lp},
                    Qp.w1 - sq.Q,
                    Jp.w1 - sq.J,
                    W2Element(n, m),
                    W2Element(n, m),
                    q_potential};
  return out;
}

W2Element d_op(const Frame& F, const W1Element& u) {
  const int n = u.n(), m = u.m();
  W2Element r(n, m);
  r.w1.cov = frame_dscalar(F, u.scalar);
  r.dpart.vec = u.vec;
  for (int s = 0; s < n; ++s) {
    const SuperScalar& c = u.cov.c[s];
    if (c.is_zero()) continue;
    for (const auto& [mask, f] : c.terms())
      if (mask != 0 || !f.is_constant())
        throw UnsupportedShape("d_op: even one-form slot with a nonconstant coefficient");
    r.om2[s] = r.om2[s] + c;
  }
  for (int mu = 0; mu < m; ++mu) r.dpart.cov.d[mu] = u.cov.d[mu];
  return r;
}

int fermionic_charge(const W1Element& u) {
  ChargeAcc acc;
  acc.add_w1(u, 0);
  return acc.any ? acc.q : 0;
}

int fermionic_charge(const W2Element& u) {
  ChargeAcc acc;
  acc.add_w1(u.w1, 0);
  acc.add_w1(u.dpart, 0);
  for (int s = 0; s < u.n(); ++s) {
    acc.add_w1(u.om1[s], 0);
    acc.add(u.om2[s], 0);
  }
  for (int mu = 0; mu < u.m(); ++mu) {
    for (int p = 0; p < u.n(); ++p) acc.add(u.rho1[mu].a[p], 1);
    for (int nu = 0; nu < u.m(); ++nu) acc.add(u.rho1[mu].b[nu], 0);
    for (int t = 0; t < u.n(); ++t) acc.add(u.psi1[mu].c[t], -1);
    for (int nu = 0; nu < u.m(); ++nu) acc.add(u.psi1[mu].d[nu], 0);
  }
  return acc.any ? acc.q : 0;
}

int conformal_weight(const W1Element& u) {
  const bool w0 = !u.scalar.is_zero();
  const bool w1 = !u.vec.is_zero() || !u.cov.is_zero();
  if (w0 && w1) throw DomainError("conformal_weight: element mixes weights");
  return w1 ? 1 : 0;
}

int conformal_weight(const W2Element& u) {
  const bool lower = !u.w1.is_zero();
  const bool upper = !u.pure_w1();
  if (lower && upper) throw DomainError("conformal_weight: element mixes weights");
  if (upper) return 2;
  return lower ? conformal_weight(u.w1) : 0;
}

W1Element j0_apply(const W1Element& u) {
  W1Element r(u.n(), u.m());
  r.scalar = charge_scale(u.scalar, 0);
  for (int p = 0; p < u.n(); ++p) r.vec.a[p] = charge_scale(u.vec.a[p], 0);
  for (int nu = 0; nu < u.m(); ++nu) r.vec.b[nu] = charge_scale(u.vec.b[nu], -1);
  for (int s = 0; s < u.n(); ++s) r.cov.c[s] = charge_scale(u.cov.c[s], 0);
  for (int mu = 0; mu < u.m(); ++mu) r.cov.d[mu] = charge_scale(u.cov.d[mu], 1);
  return r;
}

W2Element j0_apply(const W2Element& u) {
  W2Element r(u.n(), u.m());
  r.w1 = j0_apply(u.w1);
  r.dpart = j0_apply(u.dpart);
  for (int s = 0; s < u.n(); ++s) {
    r.om1[s] = j0_apply(u.om1[s]);
    r.om2[s] = charge_scale(u.om2[s], 0);
  }
  for (int mu = 0; mu < u.m(); ++mu) {
    for (int p = 0; p < u.n(); ++p) r.rho1[mu].a[p] = charge_scale(u.rho1[mu].a[p], 1);
    for (int nu = 0; nu < u.m(); ++nu) r.rho1[mu].b[nu] = charge_scale(u.rho1[mu].b[nu], 0);
    for (int t = 0; t < u.n(); ++t) r.psi1[mu].c[t] = charge_scale(u.psi1[mu].c[t], -1);
    for (int nu = 0; nu < u.m(); ++nu) r.psi1[mu].d[nu] = charge_scale(u.psi1[mu].d[nu], 0);
  }
  return r;
}

W1Element l0_apply(const W1Element& u) {
  W1Element r(u.n(), u.m());
  r.vec = u.vec;
  r.cov = u.cov;
  return r;
}

W2Element l0_apply(const W2Element& u) {
  W2Element r(u.n(), u.m());
  r.w1 = l0_apply(u.w1);
  for (int s = 0; s < u.n(); ++s) {
    r.om1[s] = scalar_mul(SuperScalar::from_rational(u.n(), u.m(), Rational(2)), u.om1[s]);
    r.om2[s] = int_scale(u.om2[s], 2);
  }
  for (int mu = 0; mu < u.m(); ++mu) {
    r.rho1[mu] = scalar_mul(SuperScalar::from_rational(u.n(), u.m(), Rational(2)), u.rho1[mu]);
    r.psi1[mu] = scalar_mul(SuperScalar::from_rational(u.n(), u.m(), Rational(2)), u.psi1[mu]);
  }
  r.dpart = scalar_mul(SuperScalar::from_rational(u.n(), u.m(), Rational(2)), u.dpart);
  return r;
}

SuperCovector log_diff_zero_mode(const Frame& F, const RatFunc& a, const SuperVector& x) {
  const int m = F.m;
  const RatFunc inv = RatFunc::constant(a.nvars(), Rational(1)) / a;
  const SuperCovector w = scalar_mul(SuperScalar::from_ratfunc(inv, m),
                                     frame_dscalar(F, SuperScalar::from_ratfunc(a, m)));
  return frame_dscalar(F, pairing(x, w)) - frame_lie_cov(F, x, w);
}

}  // namespace vaw
