#include "cocycles/cocycles.hpp"

#include <array>
#include <bit>
#include <map>
#include <optional>
#include <utility>

#include "algebroid/structure.hpp"
#include "kernel/error.hpp"

namespace vaw {

namespace {

// A frame's i-th lifted derivation acting entrywise on a matrix of chart
// functions; `lift` holds the derivation's coefficients against the source
// derivations (row i), so only the even part acts.
RatMatrix lifted_mat_deriv(const Frame& src, const RatMatrix& lift, int i,
                           const RatMatrix& M) {
  RatMatrix r(M.rows(), M.cols(), M.nvars());
  for (int p = 0; p < lift.cols(); ++p) {
    const RatFunc& c = lift.at(i, p);
    if (c.is_zero()) continue;
    const RatMatrix dM = frame_deriv_mat(src, p, M);
    for (int a = 0; a < M.rows(); ++a)
      for (int b = 0; b < M.cols(); ++b) r.at(a, b) = r.at(a, b) + c * dM.at(a, b);
  }
  return r;
}

// Row i of a coefficient matrix as a one-form against the source slots.
SuperCovector row_cov(const RatMatrix& H, int i, int n, int m) {
  SuperCovector w(n, m);
  for (int q = 0; q < n; ++q) w.c[q] = SuperScalar::from_ratfunc(H.at(i, q), m);
  return w;
}

SuperCovector dscalar_fn(const Frame& F, const RatFunc& f) {
  return frame_dscalar(F, SuperScalar::from_ratfunc(f, F.m));
}

SuperCovector mul_cov(const RatFunc& c, const SuperCovector& w, int m) {
  return scalar_mul(SuperScalar::from_ratfunc(c, m), w);
}

// Pull a one-form value from `F` representation down to the coordinate
// representation; `anchor` is the coordinate-to-F change (null when F is the
// coordinate frame itself).
SuperCovector pull_cov(const FrameChange* anchor, const SuperCovector& w) {
  if (anchor == nullptr) return w;
  return change_frame(*anchor, AlgebroidElement(w), ChangeDir::inverse).cov;
}

// Assemble a small-complex form over the coordinate frame from its values on
// the lifted derivations of `dst` (already pulled to coordinate
// representation).  The coordinate derivations expand in the lifted ones
// through the inverse of the frame's even factor; odd directions carry no
// value.
PolyForm assemble_deg2(const Frame& dst, int n, int m,
                       const std::vector<SuperCovector>& w) {
  const RatMatrix& e = dst.g0inv;
  PolyForm f(n, m, 2, 0);
  for (const auto& T : canonical_tuples(n, m, 1)) {
    if (T[0] >= n) continue;
    SuperCovector acc(n, m);
    for (int i = 0; i < n; ++i) {
      const RatFunc& c = e.at(T[0], i);
      if (c.is_zero()) continue;
      acc = acc + mul_cov(c, w[i], m);
    }
    f.set_value(T, acc);
  }
  return f.skew_project();
}

PolyForm assemble_deg3(const Frame& dst, int n, int m,
                       const std::vector<std::vector<SuperCovector>>& w) {
  const RatMatrix& e = dst.g0inv;
  PolyForm f(n, m, 3, 0);
  for (const auto& T : canonical_tuples(n, m, 2)) {
    if (T[0] >= n || T[1] >= n) continue;
    SuperCovector acc(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const RatFunc c = e.at(T[0], i) * e.at(T[1], j);
        if (c.is_zero()) continue;
        acc = acc + mul_cov(c, w[i][j], m);
      }
    f.set_value(T, acc);
  }
  return f.skew_project();
}

// The map of a change, without kind validation.  Row i, column j: the
// coefficient of the j-th source one-form in the value on the i-th lifted
// derivation.
HMap compute_h(const FrameChange& fc) {
  const Frame& S = fc.src;
  const int n = S.n;
  const RatFunc half = RatFunc::constant(n, Rational(1, 2));

  std::vector<RatMatrix> dg(n), dAinv(n);
  for (int q = 0; q < n; ++q) {
    dg[q] = frame_deriv_mat(S, q, fc.g);
    dAinv[q] = frame_deriv_mat(S, q, fc.Ainv);
  }

  HMap h;
  h.from_even = RatMatrix(n, n, n);
  h.from_odd = RatMatrix(n, n, n);
  for (int i = 0; i < n; ++i) {
    const RatFunc gtr = fc.gmix_trace(i);
    for (int j = 0; j < n; ++j) {
      RatFunc lead(n);
      for (int p = 0; p < n; ++p) lead = lead + frame_deriv(S, p, dg[j].at(i, p));
      RatFunc corr(n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            corr = corr + dg[q].at(i, p) * dg[p].at(r, q) * fc.ginv.at(j, r);
      h.from_even.at(i, j) = lead + corr * half;

      RatFunc tr(n);
      for (int q = 0; q < n; ++q)
        tr = tr + fc.g.at(i, q) * (dAinv[j] * fc.A * dAinv[q] * fc.A).trace();
      h.from_odd.at(i, j) = frame_deriv(S, j, gtr) + tr * half;
    }
  }
  h.full = h.from_even - h.from_odd;
  return h;
}

// Values of the degree-3 form on pairs of lifted derivations (source
// representation), from the structure maps of the source model.
std::vector<std::vector<SuperCovector>> b_values_maps(const FrameChange& fc,
                                                      const HMap& h) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  VertexAlgebroidStructure T(S);
  std::vector<SuperVector> tp;
  std::vector<SuperCovector> hv;
  for (int i = 0; i < n; ++i) {
    tp.push_back(fc.tau_dst_in_src(i));
    hv.push_back(row_cov(h.full, i, n, m));
  }
  std::vector<std::vector<SuperCovector>> w(
      n, std::vector<SuperCovector>(n, SuperCovector(n, m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[i][j] = T.c_eval(tp[i], tp[j]) - frame_lie_cov(S, tp[i], hv[j]) +
                frame_lie_cov(S, tp[j], hv[i]);

  // Rows against the lifted odd basis must vanish: the map kills it, the
  // structure tables pair it to nothing, and its action on the values above
  // is trivial.  A failure here means the assembled form would not live in
  // the small complex.
  for (int i = 0; i < n; ++i)
    for (int al = 0; al < m; ++al) {
      const SuperVector ps = fc.psi_dst_in_src(al);
      const SuperCovector mix = T.c_eval(tp[i], ps) + frame_lie_cov(S, ps, hv[i]);
      if (!mix.is_zero())
        throw Error("b_of_change: value on an odd direction does not vanish");
    }
  return w;
}

// The same values from the closed trace formula.
std::vector<std::vector<SuperCovector>> b_values_traces(const FrameChange& fc) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  const RatFunc half = RatFunc::constant(n, Rational(1, 2));
  std::vector<RatMatrix> G(n), B(n);
  for (int i = 0; i < n; ++i) {
    G[i] = fc.ginv * lifted_mat_deriv(S, fc.g, i, fc.g);
    B[i] = fc.Ainv * lifted_mat_deriv(S, fc.g, i, fc.A);
  }
  std::vector<std::vector<SuperCovector>> w(
      n, std::vector<SuperCovector>(n, SuperCovector(n, m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SuperCovector acc(n, m);
      for (int r = 0; r < n; ++r) {
        const RatFunc c = (((B[i] * B[j] - B[j] * B[i]) * B[r]).trace() -
                           ((G[i] * G[j] - G[j] * G[i]) * G[r]).trace()) *
                          half;
        if (c.is_zero()) continue;
        acc = acc + mul_cov(c, fc.om_dst_in_src(r), m);
      }
      w[i][j] = acc;
    }
  return w;
}

// Values of the odd-factor part of the degree-3 form, term by term.
std::vector<std::vector<SuperCovector>> b_odd_values_terms(const FrameChange& fc,
                                                           const HMap& h) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  const RatFunc half = RatFunc::constant(n, Rational(1, 2));
  std::vector<std::vector<SuperCovector>> w(
      n, std::vector<SuperCovector>(n, SuperCovector(n, m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SuperCovector acc(n, m);
      for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
          const RatFunc ci = fc.gmix[i].at(mu, nu) * half;
          if (!ci.is_zero()) acc = acc - mul_cov(ci, dscalar_fn(S, fc.gmix[j].at(nu, mu)), m);
          const RatFunc cj = fc.gmix[j].at(nu, mu) * half;
          if (!cj.is_zero()) acc = acc + mul_cov(cj, dscalar_fn(S, fc.gmix[i].at(mu, nu)), m);
        }
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          const RatFunc ti = fc.g.at(i, p) * frame_deriv(S, p, h.from_odd.at(j, q));
          if (!ti.is_zero()) acc = acc - mul_cov(ti, SuperCovector::unit_om(n, m, q), m);
          const RatFunc tj = fc.g.at(j, p) * frame_deriv(S, p, h.from_odd.at(i, q));
          if (!tj.is_zero()) acc = acc + mul_cov(tj, SuperCovector::unit_om(n, m, q), m);
        }
        if (!h.from_odd.at(j, p).is_zero())
          acc = acc - mul_cov(h.from_odd.at(j, p), dscalar_fn(S, fc.g.at(i, p)), m);
        if (!h.from_odd.at(i, p).is_zero())
          acc = acc + mul_cov(h.from_odd.at(i, p), dscalar_fn(S, fc.g.at(j, p)), m);
      }
      w[i][j] = acc;
    }
  return w;
}

// The same odd-factor values from the closed trace formula.
std::vector<std::vector<SuperCovector>> b_odd_values_traces(const FrameChange& fc) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  const RatFunc mhalf = RatFunc::constant(n, Rational(-1, 2));
  std::vector<RatMatrix> B(n);
  for (int i = 0; i < n; ++i) B[i] = fc.Ainv * lifted_mat_deriv(S, fc.g, i, fc.A);
  std::vector<std::vector<SuperCovector>> w(
      n, std::vector<SuperCovector>(n, SuperCovector(n, m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SuperCovector acc(n, m);
      for (int r = 0; r < n; ++r) {
        const RatFunc c = ((B[i] * B[j] - B[j] * B[i]) * B[r]).trace() * mhalf;
        if (c.is_zero()) continue;
        acc = acc + mul_cov(c, fc.om_dst_in_src(r), m);
      }
      w[i][j] = acc;
    }
  return w;
}

std::optional<FrameChange> coordinate_anchor(const Frame& F) {
  if (F.is_base()) return std::nullopt;
  return FrameChange(Frame::base(F.n, F.m), F);
}

PolyForm assemble_pair_values(const FrameChange& fc,
                              std::vector<std::vector<SuperCovector>> w) {
  const int n = fc.src.n, m = fc.src.m;
  const auto anchor = coordinate_anchor(fc.src);
  const FrameChange* ap = anchor ? &*anchor : nullptr;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = pull_cov(ap, w[i][j]);
  return assemble_deg3(fc.dst, n, m, w);
}

}  // namespace

Frame BundleSpec::frame(const std::string& id, const std::vector<RatFunc>& coords,
                        const RatMatrix* odd) const {
  const RatMatrix g0 = jacobian_frame_matrix(coords);
  switch (kind) {
    case BundleKind::tangent:
      return Frame::from_coords(id, coords, g0);
    case BundleKind::cotangent:
      return Frame::from_coords(id, coords, g0.inverse().transpose());
    case BundleKind::general:
      if (odd == nullptr)
        throw DomainError("BundleSpec::frame: the general kind needs an explicit odd factor");
      return Frame::from_coords(id, coords, *odd);
  }
  throw DomainError("BundleSpec::frame: unknown kind");
}

bool BundleSpec::matches(const FrameChange& fc) const {
  switch (kind) {
    case BundleKind::tangent:
      return fc.A == fc.g;
    case BundleKind::cotangent:
      return fc.A == fc.ginv.transpose();
    case BundleKind::general:
      return true;
  }
  return false;
}

Frame dual_frame(const Frame& F) {
  return Frame::raw(F.id + "-dual", F.g0, F.A0inv.transpose(), F.holonomic);
}

HMap h_of_change(const FrameChange& fc, const BundleSpec& spec) {
  if (!fc.holonomic)
    throw DomainError("h_of_change: the change of frame must be holonomic");
  if (!spec.matches(fc))
    throw DomainError("h_of_change: odd factor does not match the bundle kind");
  return compute_h(fc);
}

SuperCovector hmap_apply(const FrameChange& fc, const HMap& h, const SuperVector& v) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  if (v.n() != n || v.m() != m) throw DomainError("hmap_apply: size mismatch");
  SuperCovector r(n, m);
  for (int p = 0; p < n; ++p) {
    RatFunc a(n);
    for (const auto& [mask, cf] : v.a[p].terms()) {
      if (cf.is_zero()) continue;
      if (mask != 0u)
        throw UnsupportedShape("hmap_apply: even-slot coefficient carries generators");
      a = cf;
    }
    if (a.is_zero()) continue;
    r = r + mul_cov(a, row_cov(h.full, p, n, m), m);
    const SuperCovector Da = dscalar_fn(S, a);
    for (int q = 0; q < n; ++q) {
      const RatFunc tq_a = frame_deriv(S, q, a);
      if (!tq_a.is_zero()) r = r + mul_cov(tq_a, dscalar_fn(S, fc.g.at(p, q)), m);
      const RatFunc tq_g = frame_deriv(S, q, fc.g.at(p, q));
      if (!tq_g.is_zero()) r = r + mul_cov(tq_g, Da, m);
    }
    r = r - mul_cov(fc.gmix_trace(p), Da, m);
  }
  for (int al = 0; al < m; ++al) {
    for (const auto& [mask, cf] : v.b[al].terms()) {
      if (cf.is_zero()) continue;
      if (mask == 0u) continue;  // the bare odd basis maps to zero
      if ((mask & (mask - 1u)) != 0u)
        throw UnsupportedShape(
            "hmap_apply: odd-slot coefficient carries more than one generator");
      const int gam = std::countr_zero(mask);
      for (int be = 0; be < m; ++be) {
        const RatFunc c = cf * fc.A.at(gam, be);
        if (c.is_zero()) continue;
        r = r - mul_cov(c, dscalar_fn(S, fc.Ainv.at(be, al)), m);
      }
    }
  }
  return r;
}

bool hmap_defining_condition(const FrameChange& fc, const HMap& h) {
  const Frame& S = fc.src;
  const int n = S.n, m = S.m;
  VertexAlgebroidStructure T(S);
  const SuperScalar mhalf = SuperScalar::from_rational(n, m, Rational(-1, 2));
  std::vector<AlgebroidElement> basis;
  std::vector<SuperCovector> hval;
  for (int i = 0; i < n; ++i) {
    basis.emplace_back(fc.tau_dst_in_src(i));
    hval.push_back(row_cov(h.full, i, n, m));
  }
  for (int al = 0; al < m; ++al) {
    basis.emplace_back(fc.psi_dst_in_src(al));
    hval.emplace_back(n, m);
  }
  for (const auto& x : basis)
    for (size_t y = 0; y < basis.size(); ++y) {
      const SuperScalar lhs = T.pairing_eval(x, AlgebroidElement(hval[y]));
      const SuperScalar rhs = mhalf * T.pairing_eval(x, basis[y]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

PolyForm b_of_change(const FrameChange& fc, const BundleSpec& spec) {
  const HMap h = h_of_change(fc, spec);
  const int n = fc.src.n;
  const auto w1 = b_values_maps(fc, h);
  const auto w2 = b_values_traces(fc);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(w1[i][j] == w2[i][j]))
        throw Error("b_of_change: the two routes disagree");
  return assemble_pair_values(fc, w1);
}

PolyForm b_odd_part(const FrameChange& fc) {
  if (!fc.holonomic)
    throw DomainError("b_odd_part: the change of frame must be holonomic");
  const HMap h = compute_h(fc);
  const int n = fc.src.n;
  const auto w1 = b_odd_values_terms(fc, h);
  const auto w2 = b_odd_values_traces(fc);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(w1[i][j] == w2[i][j]))
        throw Error("b_odd_part: the two routes disagree");
  return assemble_pair_values(fc, w1);
}

PolyForm a_of_triple(const FrameChange& fc1, const FrameChange& fc2,
                     const BundleSpec& spec) {
  if (fc1.dst.n != fc2.src.n || fc1.dst.m != fc2.src.m ||
      !(fc1.dst.g0 == fc2.src.g0) || !(fc1.dst.A0 == fc2.src.A0))
    throw DomainError("a_of_triple: changes do not share the middle frame");
  const Frame& S = fc1.src;
  const int n = S.n, m = S.m;
  const FrameChange fc3(fc1.src, fc2.dst);
  const HMap h1 = h_of_change(fc1, spec);
  const HMap h2 = h_of_change(fc2, spec);
  const HMap h3 = h_of_change(fc3, spec);

  // Telescoped route: the maps of the two legs against the map of the
  // composite, everything expressed in source representation.
  std::vector<SuperCovector> w1;
  for (int i = 0; i < n; ++i) {
    SuperCovector acc = hmap_apply(fc1, h1, fc2.tau_dst_in_src(i));
    const SuperCovector mid = row_cov(h2.full, i, n, m);
    acc = acc + change_frame(fc1, AlgebroidElement(mid), ChangeDir::inverse).cov;
    acc = acc - row_cov(h3.full, i, n, m);
    w1.push_back(acc);
  }
  for (int al = 0; al < m; ++al)
    if (!hmap_apply(fc1, h1, fc2.psi_dst_in_src(al)).is_zero())
      throw Error("a_of_triple: value on an odd direction does not vanish");

  // Closed trace route.
  const RatFunc half = RatFunc::constant(n, Rational(1, 2));
  std::vector<RatMatrix> DG1(n), DG2(n), DA1(n), DA2(n);
  for (int i = 0; i < n; ++i) {
    DG1[i] = lifted_mat_deriv(S, fc3.g, i, fc1.g);
    DG2[i] = lifted_mat_deriv(S, fc3.g, i, fc2.g);
    DA1[i] = lifted_mat_deriv(S, fc3.g, i, fc1.A);
    DA2[i] = lifted_mat_deriv(S, fc3.g, i, fc2.A);
  }
  for (int i = 0; i < n; ++i) {
    SuperCovector acc(n, m);
    for (int s = 0; s < n; ++s) {
      const RatFunc cg = (fc2.ginv * DG2[i] * DG1[s] * fc1.ginv).trace() -
                         (fc2.ginv * DG2[s] * DG1[i] * fc1.ginv).trace();
      const RatFunc ca = (fc2.Ainv * DA2[i] * DA1[s] * fc1.Ainv).trace() -
                         (fc2.Ainv * DA2[s] * DA1[i] * fc1.Ainv).trace();
      const RatFunc c = (cg - ca) * half;
      if (c.is_zero()) continue;
      acc = acc + mul_cov(c, fc3.om_dst_in_src(s), m);
    }
    if (!(acc == w1[i])) throw Error("a_of_triple: the two routes disagree");
  }

  const auto anchor = coordinate_anchor(S);
  const FrameChange* ap = anchor ? &*anchor : nullptr;
  std::vector<SuperCovector> w(n, SuperCovector(n, m));
  for (int i = 0; i < n; ++i) w[i] = pull_cov(ap, w1[i]);
  return assemble_deg2(fc2.dst, n, m, w);
}

PolyForm a_odd_part(const FrameChange& fc1, const FrameChange& fc2) {
  if (fc1.dst.n != fc2.src.n || fc1.dst.m != fc2.src.m ||
      !(fc1.dst.g0 == fc2.src.g0) || !(fc1.dst.A0 == fc2.src.A0))
    throw DomainError("a_odd_part: changes do not share the middle frame");
  const Frame& S = fc1.src;
  const int n = S.n, m = S.m;
  const FrameChange fc3(fc1.src, fc2.dst);
  const HMap h1 = compute_h(fc1);
  const HMap h2 = compute_h(fc2);
  const HMap h3 = compute_h(fc3);

  // Term-by-term route.
  std::vector<SuperCovector> w1;
  for (int i = 0; i < n; ++i) {
    SuperCovector acc(n, m);
    for (int p = 0; p < n; ++p) {
      for (int r = 0; r < n; ++r) {
        const RatFunc c = fc2.g.at(i, p) * h1.from_odd.at(p, r);
        if (!c.is_zero()) acc = acc + mul_cov(c, SuperCovector::unit_om(n, m, r), m);
      }
      const RatFunc tr1 = fc1.gmix_trace(p);
      if (!tr1.is_zero()) acc = acc + mul_cov(tr1, dscalar_fn(S, fc2.g.at(i, p)), m);
    }
    for (int al = 0; al < m; ++al)
      for (int gam = 0; gam < m; ++gam) {
        const RatFunc w = fc2.gmix[i].at(al, gam);
        if (w.is_zero()) continue;
        for (int be = 0; be < m; ++be) {
          const RatFunc c = w * fc1.A.at(gam, be);
          if (!c.is_zero()) acc = acc + mul_cov(c, dscalar_fn(S, fc1.Ainv.at(be, al)), m);
        }
      }
    for (int p = 0; p < n; ++p) {
      const RatFunc c = h2.from_odd.at(i, p);
      if (!c.is_zero()) acc = acc + mul_cov(c, fc1.om_dst_in_src(p), m);
    }
    acc = acc - row_cov(h3.from_odd, i, n, m);
    w1.push_back(acc);
  }

  // Closed trace route.
  const RatFunc half = RatFunc::constant(n, Rational(1, 2));
  std::vector<RatMatrix> DA1(n), DA2(n);
  for (int i = 0; i < n; ++i) {
    DA1[i] = lifted_mat_deriv(S, fc3.g, i, fc1.A);
    DA2[i] = lifted_mat_deriv(S, fc3.g, i, fc2.A);
  }
  for (int i = 0; i < n; ++i) {
    SuperCovector acc(n, m);
    for (int r = 0; r < n; ++r) {
      const RatFunc c = ((fc2.Ainv * DA2[i] * DA1[r] * fc1.Ainv).trace() -
                         (fc2.Ainv * DA2[r] * DA1[i] * fc1.Ainv).trace()) *
                        half;
      if (c.is_zero()) continue;
      acc = acc + mul_cov(c, fc3.om_dst_in_src(r), m);
    }
    if (!(acc == w1[i])) throw Error("a_odd_part: the two routes disagree");
  }

  const auto anchor = coordinate_anchor(S);
  const FrameChange* ap = anchor ? &*anchor : nullptr;
  std::vector<SuperCovector> w(n, SuperCovector(n, m));
  for (int i = 0; i < n; ++i) w[i] = pull_cov(ap, w1[i]);
  return assemble_deg2(fc2.dst, n, m, w);
}

CocyclePair cocycle_pair(const FrameChange& fc1, const FrameChange& fc2,
                         const BundleSpec& spec) {
  CocyclePair p{a_of_triple(fc1, fc2, spec), b_of_change(fc1, spec)};
  if (!p.b.d().is_zero()) throw Error("cocycle_pair: degree-3 form is not closed");
  return p;
}

DualReport dual_compare(const Frame& f1, const Frame& f2, const Frame& f3) {
  const Frame d1 = dual_frame(f1), d2 = dual_frame(f2), d3 = dual_frame(f3);
  const FrameChange fc12(f1, f2), fc23(f2, f3);
  const FrameChange fd12(d1, d2), fd23(d2, d3);
  DualReport r;
  r.b_parts_equal = b_odd_part(fc12) == b_odd_part(fd12) &&
                    b_odd_part(fc23) == b_odd_part(fd23);
  r.a_parts_equal = a_odd_part(fc12, fc23) == a_odd_part(fd12, fd23);
  return r;
}

const int kPairSum[3] = {-1, +1, -1};

std::vector<CechCheck> cech_consistency(const std::vector<Frame>& frames,
                                        const BundleSpec& spec) {
  if (frames.size() < 4)
    throw DomainError("cech_consistency: need at least four frames");
  const int N = static_cast<int>(frames.size());
  const auto tag = [](std::initializer_list<int> ix) {
    std::string s;
    for (int v : ix) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
    return s;
  };
  const auto apply_sign = [](int s, const PolyForm& f) { return s > 0 ? f : -f; };

  std::vector<CechCheck> out;
  std::map<std::pair<int, int>, PolyForm> b;
  std::map<std::array<int, 3>, PolyForm> a;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      b[{i, j}] = b_of_change(FrameChange(frames[i], frames[j]), spec);
      out.push_back({"closed " + tag({i, j}), b[{i, j}].d().is_zero()});
    }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k) {
        a[{i, j, k}] = a_of_triple(FrameChange(frames[i], frames[j]),
                                   FrameChange(frames[j], frames[k]), spec);
        const PolyForm rhs = apply_sign(kPairSum[0], b[{j, k}]) +
                             apply_sign(kPairSum[1], b[{i, k}]) +
                             apply_sign(kPairSum[2], b[{i, j}]);
        out.push_back({"pair-sum " + tag({i, j, k}), a[{i, j, k}].d() == rhs});
      }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k)
        for (int l = k + 1; l < N; ++l) {
          const PolyForm s =
              a[{j, k, l}] - a[{i, k, l}] + a[{i, j, l}] - a[{i, j, k}];
          out.push_back({"four-term " + tag({i, j, k, l}), s.is_zero()});
        }
  return out;
}

}  // namespace vaw
