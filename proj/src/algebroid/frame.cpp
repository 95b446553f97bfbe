#include "algebroid/frame.hpp"

#include "kernel/error.hpp"

namespace vaw {

// Frame derivation of a plain chart function: slot q stands for
// sum_p g0(q, p) d/dx_p.
RatFunc frame_deriv(const Frame& F, int q, const RatFunc& f) {
  if (F.g0.is_identity()) return f.partial(q);
  RatFunc r(f.nvars());
  for (int p = 0; p < F.n; ++p) {
    const RatFunc& w = F.g0.at(q, p);
    if (!w.is_zero()) r += w * f.partial(p);
  }
  return r;
}

RatMatrix frame_deriv_mat(const Frame& F, int q, const RatMatrix& M) {
  RatMatrix r(M.rows(), M.cols(), M.nvars());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) r.at(i, j) = frame_deriv(F, q, M.at(i, j));
  return r;
}

Frame Frame::base(int n, int m) {
  Frame F;
  F.id = "base";
  F.n = n;
  F.m = m;
  F.g0 = RatMatrix::identity(n, n);
  F.A0 = RatMatrix::identity(m, n);
  F.g0inv = F.g0;
  F.A0inv = F.A0;
  F.holonomic = true;
  return F;
}

Frame Frame::from_coords(const std::string& id, const std::vector<RatFunc>& new_coords,
                         const RatMatrix& A0) {
  const int n = static_cast<int>(new_coords.size());
  if (n == 0) throw Error("frame needs at least one coordinate");
  if (new_coords[0].nvars() != n) throw Error("coordinate map must be square");
  Frame F;
  F.id = id;
  F.n = n;
  F.m = A0.rows();
  F.g0 = jacobian_frame_matrix(new_coords);
  F.g0inv = F.g0.inverse();
  F.A0 = A0;
  F.A0inv = A0.inverse();
  F.coords = new_coords;
  F.holonomic = true;
  return F;
}

Frame Frame::raw(const std::string& id, const RatMatrix& g0, const RatMatrix& A0,
                 bool holonomic) {
  Frame F;
  F.id = id;
  F.n = g0.rows();
  F.m = A0.rows();
  F.g0 = g0;
  F.g0inv = g0.inverse();
  F.A0 = A0;
  F.A0inv = A0.inverse();
  F.holonomic = holonomic;
  return F;
}

SuperScalar frame_tau(const Frame& F, int q, const SuperScalar& f) {
  if (F.g0.is_identity()) return f.tau(q);
  SuperScalar r(f.n(), f.m());
  for (int p = 0; p < F.n; ++p) {
    const RatFunc& w = F.g0.at(q, p);
    if (!w.is_zero()) r += SuperScalar::from_ratfunc(w, f.m()) * f.tau(p);
  }
  return r;
}

SuperScalar frame_apply(const Frame& F, const SuperVector& v, const SuperScalar& f) {
  return F.g0.is_identity() ? apply(v, f) : apply(F.g0, v, f);
}

SuperVector frame_bracket(const Frame& F, const SuperVector& v, const SuperVector& w) {
  return F.g0.is_identity() ? bracket(v, w) : bracket(F.g0, v, w);
}

SuperCovector frame_dscalar(const Frame& F, const SuperScalar& f) {
  return F.g0.is_identity() ? dscalar(f) : dscalar(F.g0, f);
}

SuperCovector frame_lie_cov(const Frame& F, const SuperVector& v, const SuperCovector& w) {
  return F.g0.is_identity() ? lie_cov(v, w) : lie_cov(F.g0, v, w);
}

AlgebroidElement scalar_mul(const SuperScalar& f, const AlgebroidElement& x) {
  return {scalar_mul(f, x.vec), scalar_mul(f, x.cov)};
}

FrameChange::FrameChange(Frame source, Frame dest) : src(std::move(source)), dst(std::move(dest)) {
  if (src.n != dst.n || src.m != dst.m) throw Error("frame change across different charts");
  g = dst.g0 * src.g0inv;
  ginv = src.g0 * dst.g0inv;
  A = dst.A0 * src.A0inv;
  Ainv = src.A0 * dst.A0inv;
  holonomic = src.holonomic && dst.holonomic;
  const int n = src.n, m = src.m;
  gmix.assign(n, RatMatrix(m, m, n));
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q) {
      const RatFunc& giq = g.at(i, q);
      if (giq.is_zero()) continue;
      const RatMatrix dAinv = frame_deriv_mat(src, q, Ainv);
      const RatMatrix t = dAinv * A;
      for (int al = 0; al < m; ++al)
        for (int ga = 0; ga < m; ++ga) gmix[i].at(al, ga) += giq * t.at(al, ga);
    }
}

SuperVector FrameChange::tau_dst_in_src(int i) const {
  const int n = src.n, m = src.m;
  SuperVector v(n, m);
  for (int q = 0; q < n; ++q) v.a[q] = SuperScalar::from_ratfunc(g.at(i, q), m);
  for (int al = 0; al < m; ++al) {
    SuperScalar s(n, m);
    for (int ga = 0; ga < m; ++ga) s.add_term(1u << ga, gmix[i].at(al, ga));
    v.b[al] = s;
  }
  return v;
}

SuperVector FrameChange::psi_dst_in_src(int alpha) const {
  const int n = src.n, m = src.m;
  SuperVector v(n, m);
  for (int mu = 0; mu < m; ++mu) v.b[mu] = SuperScalar::from_ratfunc(Ainv.at(mu, alpha), m);
  return v;
}

SuperCovector FrameChange::om_dst_in_src(int i) const {
  const int n = src.n, m = src.m;
  SuperCovector w(n, m);
  for (int p = 0; p < n; ++p) w.c[p] = SuperScalar::from_ratfunc(ginv.at(p, i), m);
  return w;
}

SuperCovector FrameChange::rho_dst_in_src(int alpha) const {
  const int n = src.n, m = src.m;
  SuperCovector w(n, m);
  for (int i = 0; i < n; ++i) {
    SuperScalar s(n, m);
    for (int ga = 0; ga < m; ++ga) s.add_term(1u << ga, frame_deriv(src, i, A.at(alpha, ga)));
    w.c[i] = s;
  }
  for (int mu = 0; mu < m; ++mu) w.d[mu] = SuperScalar::from_ratfunc(A.at(alpha, mu), m);
  return w;
}

SuperVector FrameChange::tau_src_in_dst(int q) const {
  const int n = src.n, m = src.m;
  SuperVector v(n, m);
  for (int i = 0; i < n; ++i) v.a[i] = SuperScalar::from_ratfunc(ginv.at(q, i), m);
  for (int al = 0; al < m; ++al) {
    SuperScalar s(n, m);
    for (int de = 0; de < m; ++de) {
      RatFunc coef(n);
      for (int ga = 0; ga < m; ++ga)
        coef += frame_deriv(src, q, A.at(al, ga)) * Ainv.at(ga, de);
      s.add_term(1u << de, coef);
    }
    v.b[al] = s;
  }
  return v;
}

SuperVector FrameChange::psi_src_in_dst(int beta) const {
  const int n = src.n, m = src.m;
  SuperVector v(n, m);
  for (int al = 0; al < m; ++al) v.b[al] = SuperScalar::from_ratfunc(A.at(al, beta), m);
  return v;
}

SuperCovector FrameChange::om_src_in_dst(int j) const {
  const int n = src.n, m = src.m;
  SuperCovector w(n, m);
  for (int p = 0; p < n; ++p) w.c[p] = SuperScalar::from_ratfunc(g.at(p, j), m);
  return w;
}

SuperCovector FrameChange::rho_src_in_dst(int beta) const {
  const int n = src.n, m = src.m;
  SuperCovector w(n, m);
  for (int p = 0; p < n; ++p) {
    SuperScalar s(n, m);
    for (int de = 0; de < m; ++de) {
      RatFunc coef(n);
      for (int ga = 0; ga < m; ++ga) coef += gmix[p].at(beta, ga) * Ainv.at(ga, de);
      s.add_term(1u << de, coef);
    }
    w.c[p] = s;
  }
  for (int al = 0; al < m; ++al) w.d[al] = SuperScalar::from_ratfunc(Ainv.at(beta, al), m);
  return w;
}

RatFunc FrameChange::gmix_trace(int i) const {
  RatFunc t(src.n);
  for (int nu = 0; nu < src.m; ++nu) t += gmix[i].at(nu, nu);
  return t;
}

bool FrameChange::commutes_first_order() const {
  const int n = src.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (int q = 0; q < n; ++q) {
        RatFunc lhs(n), rhs(n);
        for (int p = 0; p < n; ++p) {
          lhs += g.at(i, p) * frame_deriv(src, p, g.at(j, q));
          rhs += g.at(j, p) * frame_deriv(src, p, g.at(i, q));
        }
        if (lhs != rhs) return false;
      }
  return true;
}

bool FrameChange::commutes_second_order() const {
  const int n = src.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      RatFunc lhs(n), rhs(n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          lhs += g.at(i, p) * frame_deriv(src, q, frame_deriv(src, p, g.at(j, q)));
          rhs += g.at(j, q) * frame_deriv(src, p, frame_deriv(src, q, g.at(i, p)));
        }
      if (lhs != rhs) return false;
    }
  return true;
}

bool FrameChange::inverse_gradient_symmetry() const {
  const int n = src.n;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 0; r < n; ++r)
        if (frame_deriv(src, p, ginv.at(q, r)) != frame_deriv(src, q, ginv.at(p, r)))
          return false;
  return true;
}

bool FrameChange::odd_trace_symmetry() const {
  const int n = src.n;
  auto entry = [&](int p, int q) {
    const RatMatrix t = frame_deriv_mat(src, p, A) * frame_deriv_mat(src, q, Ainv);
    return t.trace();
  };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < p; ++q)
      if (entry(p, q) != entry(q, p)) return false;
  return true;
}

bool FrameChange::mixed_trace_symmetry() const {
  const int n = src.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      RatFunc lhs(n), rhs(n);
      for (int p = 0; p < n; ++p) {
        lhs += g.at(i, p) * frame_deriv(src, p, gmix_trace(j));
        rhs += g.at(j, p) * frame_deriv(src, p, gmix_trace(i));
      }
      if (lhs != rhs) return false;
    }
  return true;
}

SuperScalar transport_scalar(const FrameChange& fc, const SuperScalar& f, ChangeDir dir) {
  const RatMatrix& M = dir == ChangeDir::forward ? fc.Ainv : fc.A;
  const int n = fc.src.n, m = fc.src.m;
  SuperScalar r(n, m);
  for (const auto& [mask, coef] : f.terms()) {
    SuperScalar t = SuperScalar::from_ratfunc(coef, m);
    for (int ga = 0; ga < m; ++ga) {
      if (!(mask & (1u << ga))) continue;
      SuperScalar lin(n, m);
      for (int de = 0; de < m; ++de) lin.add_term(1u << de, M.at(ga, de));
      t = t * lin;
    }
    r += t;
  }
  return r;
}

AlgebroidElement change_frame(const FrameChange& fc, const AlgebroidElement& x, ChangeDir dir) {
  const int n = fc.src.n, m = fc.src.m;
  const bool fwd = dir == ChangeDir::forward;
  AlgebroidElement r(n, m);
  for (int q = 0; q < n; ++q) {
    if (!x.vec.a[q].is_zero()) {
      const SuperScalar t = transport_scalar(fc, x.vec.a[q], dir);
      r.vec = r.vec + scalar_mul(t, fwd ? fc.tau_src_in_dst(q) : fc.tau_dst_in_src(q));
    }
    if (!x.cov.c[q].is_zero()) {
      const SuperScalar t = transport_scalar(fc, x.cov.c[q], dir);
      r.cov = r.cov + scalar_mul(t, fwd ? fc.om_src_in_dst(q) : fc.om_dst_in_src(q));
    }
  }
  for (int be = 0; be < m; ++be) {
    if (!x.vec.b[be].is_zero()) {
      const SuperScalar t = transport_scalar(fc, x.vec.b[be], dir);
      r.vec = r.vec + scalar_mul(t, fwd ? fc.psi_src_in_dst(be) : fc.psi_dst_in_src(be));
    }
    if (!x.cov.d[be].is_zero()) {
      const SuperScalar t = transport_scalar(fc, x.cov.d[be], dir);
      r.cov = r.cov + scalar_mul(t, fwd ? fc.rho_src_in_dst(be) : fc.rho_dst_in_src(be));
    }
  }
  return r;
}

}  // namespace vaw
