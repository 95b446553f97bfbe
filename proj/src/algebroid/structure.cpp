#include "algebroid/structure.hpp"

#include <bit>
#include <random>

#include "kernel/error.hpp"

namespace vaw {

namespace {

// Coefficient split by odd degree: the generator-free part, the one-generator
// coefficients, and whether anything beyond that is present.
struct PhiSplit {
  RatFunc d0;
  std::vector<RatFunc> d1;
  bool higher = false;
};

PhiSplit split1(const SuperScalar& f) {
  PhiSplit s;
  s.d0 = f.term(0);
  s.d1.assign(f.m(), RatFunc(f.n()));
  for (const auto& [mask, c] : f.terms()) {
    if (mask == 0) continue;
    if (std::popcount(mask) == 1)
      s.d1[std::countr_zero(mask)] = c;
    else
      s.higher = true;
  }
  return s;
}

// Screens for the tabulated coefficient shapes on derivation-type arguments:
// derivation slots must carry generator-free coefficients, odd slots at most
// one generator.
void screen_vector(const SuperVector& v, const char* what) {
  for (const auto& ai : v.a)
    for (const auto& [mask, c] : ai.terms())
      if (mask != 0)
        throw UnsupportedShape(std::string(what) +
                               ": derivation coefficient carries odd generators");
  for (const auto& w : v.b)
    for (const auto& [mask, c] : w.terms())
      if (std::popcount(mask) > 1)
        throw UnsupportedShape(std::string(what) +
                               ": odd-slot coefficient carries two or more odd generators");
}

SuperScalar half_scalar(int n, int m) { return SuperScalar::from_rational(n, m, Rational(1, 2)); }

}  // namespace

SuperCovector VertexAlgebroidStructure::gamma_eval(const SuperScalar& a,
                                                   const SuperVector& t) const {
  const Frame& F = frame;
  const int n = F.n, m = F.m;
  const PhiSplit as = split1(a);
  if (as.higher)
    throw UnsupportedShape("scalar anomaly: first slot carries two or more odd generators");
  SuperCovector r(n, m);
  if (a.is_zero() || t.is_zero()) return r;
  const SuperCovector da = frame_dscalar(F, a);
  for (int i = 0; i < n; ++i) {
    const SuperScalar& b = t.a[i];
    if (b.is_zero()) continue;
    r = r - scalar_mul(frame_tau(F, i, a), frame_dscalar(F, b));
    r = r - scalar_mul(frame_tau(F, i, b), da);
  }
  for (int mu = 0; mu < m; ++mu) {
    const SuperScalar& w = t.b[mu];
    if (w.is_zero()) continue;
    const PhiSplit ws = split1(w);
    if (ws.higher)
      throw UnsupportedShape("scalar anomaly: odd-slot coefficient carries two or more odd generators");
    if (!ws.d1[mu].is_zero())
      r = r + scalar_mul(SuperScalar::from_ratfunc(ws.d1[mu], m), da);
    if (!as.d1.empty() && !as.d1[mu].is_zero()) {
      const SuperScalar am = SuperScalar::from_ratfunc(as.d1[mu], m);
      SuperScalar w1(n, m);
      for (int s = 0; s < m; ++s) w1.add_term(1u << s, ws.d1[s]);
      if (!ws.d0.is_zero())
        r = r + scalar_mul(am, frame_dscalar(F, SuperScalar::from_ratfunc(ws.d0, m)));
      if (!w1.is_zero()) r = r - scalar_mul(am, frame_dscalar(F, w1));
    }
  }
  return r;
}

SuperCovector VertexAlgebroidStructure::gamma_eval(const SuperScalar& a,
                                                   const AlgebroidElement& t) const {
  return gamma_eval(a, t.vec);
}

SuperScalar VertexAlgebroidStructure::pairing_eval(const AlgebroidElement& x,
                                                   const AlgebroidElement& y) const {
  const Frame& F = frame;
  const int n = F.n, m = F.m;
  SuperScalar r(n, m);
  if (!x.vec.is_zero() && !y.vec.is_zero()) {
    screen_vector(x.vec, "pairing");
    screen_vector(y.vec, "pairing");
    RatFunc acc(n);
    for (int i = 0; i < n; ++i) {
      const RatFunc a = x.vec.a[i].term(0);
      if (a.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const RatFunc b = y.vec.a[j].term(0);
        if (b.is_zero()) continue;
        acc -= b * frame_deriv(F, i, frame_deriv(F, j, a));
        acc -= a * frame_deriv(F, j, frame_deriv(F, i, b));
        acc -= frame_deriv(F, i, b) * frame_deriv(F, j, a);
      }
      for (int mu = 0; mu < m; ++mu) {
        const RatFunc diag = y.vec.b[mu].term(1u << mu);
        if (!diag.is_zero()) acc += a * frame_deriv(F, i, diag);
      }
    }
    for (int mu = 0; mu < m; ++mu) {
      const SuperScalar& w = x.vec.b[mu];
      if (w.is_zero()) continue;
      const RatFunc diag = w.term(1u << mu);
      if (!diag.is_zero())
        for (int j = 0; j < n; ++j) {
          const RatFunc b = y.vec.a[j].term(0);
          if (!b.is_zero()) acc += b * frame_deriv(F, j, diag);
        }
      for (int nu = 0; nu < m; ++nu) {
        const RatFunc aco = w.term(1u << nu);
        if (aco.is_zero()) continue;
        const RatFunc bco = y.vec.b[nu].term(1u << mu);
        if (!bco.is_zero()) acc += aco * bco;
      }
    }
    r.add_term(0, acc);
  }
  if (!x.vec.is_zero() && !y.cov.is_zero()) r += pairing(x.vec, y.cov);
  if (!y.vec.is_zero() && !x.cov.is_zero()) {
    for (int pv : {0, 1})
      for (int pw : {0, 1}) {
        const SuperVector v = pv ? y.vec.odd_part() : y.vec.even_part();
        const SuperCovector w = pw ? x.cov.odd_part() : x.cov.even_part();
        if (v.is_zero() || w.is_zero()) continue;
        SuperScalar t = pairing(v, w);
        if (pv & pw) t = -t;
        r += t;
      }
  }
  return r;
}

SuperCovector VertexAlgebroidStructure::c_eval(const SuperVector& x, const SuperVector& y) const {
  const Frame& F = frame;
  const int n = F.n, m = F.m;
  SuperCovector r(n, m);
  if (!x.is_zero() && !y.is_zero()) {
    screen_vector(x, "skew anomaly");
    screen_vector(y, "skew anomaly");
    const SuperScalar half = half_scalar(n, m);
    for (int i = 0; i < n; ++i) {
      const RatFunc a = x.a[i].term(0);
      if (a.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const RatFunc b = y.a[j].term(0);
        if (b.is_zero()) continue;
        const SuperScalar tib = SuperScalar::from_ratfunc(frame_deriv(F, i, b), m);
        const SuperScalar tja = SuperScalar::from_ratfunc(frame_deriv(F, j, a), m);
        SuperCovector t = scalar_mul(tib, frame_dscalar(F, tja)) -
                          scalar_mul(tja, frame_dscalar(F, tib));
        const RatFunc inner = b * frame_deriv(F, i, frame_deriv(F, j, a)) -
                              a * frame_deriv(F, j, frame_deriv(F, i, b));
        t = t + frame_dscalar(F, SuperScalar::from_ratfunc(inner, m));
        r = r + scalar_mul(half, t);
      }
      for (int mu = 0; mu < m; ++mu) {
        const RatFunc diag = y.b[mu].term(1u << mu);
        if (diag.is_zero()) continue;
        const RatFunc inner = a * frame_deriv(F, i, diag);
        r = r + scalar_mul(half, frame_dscalar(F, SuperScalar::from_ratfunc(inner, m)));
      }
    }
    for (int mu = 0; mu < m; ++mu) {
      const SuperScalar& w = x.b[mu];
      if (w.is_zero()) continue;
      const RatFunc diag = w.term(1u << mu);
      if (!diag.is_zero())
        for (int j = 0; j < n; ++j) {
          const RatFunc b = y.a[j].term(0);
          if (b.is_zero()) continue;
          const RatFunc inner = b * frame_deriv(F, j, diag);
          r = r - scalar_mul(half, frame_dscalar(F, SuperScalar::from_ratfunc(inner, m)));
        }
      for (int nu = 0; nu < m; ++nu) {
        const RatFunc aco = w.term(1u << nu);
        if (aco.is_zero()) continue;
        const RatFunc bco = y.b[nu].term(1u << mu);
        if (bco.is_zero()) continue;
        const SuperScalar as = SuperScalar::from_ratfunc(aco, m);
        const SuperScalar bs = SuperScalar::from_ratfunc(bco, m);
        SuperCovector t = scalar_mul(as, frame_dscalar(F, bs)) -
                          scalar_mul(bs, frame_dscalar(F, as));
        r = r + scalar_mul(half, t);
      }
    }
  }
  if (corrupt_c && n > 0) {
    // Deliberate defect for negative controls: shift every value by a term
    // that no skew bilinear map can produce, so the laws that consult this
    // map are guaranteed to report a violation.
    const SuperScalar junk =
        x.a[0] * y.a[0] + SuperScalar::from_rational(n, m, Rational(1));
    r = r + scalar_mul(junk, SuperCovector::unit_om(n, m, 0));
  }
  return r;
}

SuperCovector VertexAlgebroidStructure::c_eval(const AlgebroidElement& x,
                                               const AlgebroidElement& y) const {
  return c_eval(x.vec, y.vec);
}

SuperCovector VertexAlgebroidStructure::residual_gamma_module(const SuperScalar& a,
                                                              const SuperScalar& b,
                                                              const SuperVector& t) const {
  const Frame& F = frame;
  const int pa = a.parity(), pb = b.parity(), pt = t.parity();
  SuperCovector res = gamma_eval(a, scalar_mul(b, t));
  res = res - gamma_eval(a * b, t);
  res = res + scalar_mul(a, gamma_eval(b, t));
  SuperCovector t1 = scalar_mul(frame_apply(F, t, a), frame_dscalar(F, b));
  if ((pt * (pa + pb)) & 1) t1 = -t1;
  SuperCovector t2 = scalar_mul(frame_apply(F, t, b), frame_dscalar(F, a));
  if ((pa * pb + pt * pa + pt * pb) & 1) t2 = -t2;
  return res + t1 + t2;
}

SuperScalar VertexAlgebroidStructure::residual_pairing_module(const SuperScalar& a,
                                                              const SuperVector& t1,
                                                              const SuperVector& t2) const {
  const Frame& F = frame;
  const int pa = a.parity(), p1 = t1.parity(), p2 = t2.parity();
  SuperScalar res = pairing_eval(AlgebroidElement(scalar_mul(a, t1)), AlgebroidElement(t2));
  res -= a * pairing_eval(AlgebroidElement(t1), AlgebroidElement(t2));
  res -= pairing_eval(AlgebroidElement(gamma_eval(a, t1)), AlgebroidElement(t2));
  SuperScalar last = frame_apply(F, t1, frame_apply(F, t2, a));
  if ((pa * (p1 + p2)) & 1) last = -last;
  return res + last;
}

SuperCovector VertexAlgebroidStructure::residual_c_module(const SuperScalar& a,
                                                          const SuperVector& t1,
                                                          const SuperVector& t2) const {
  const Frame& F = frame;
  const int n = F.n, m = F.m;
  const int pa = a.parity(), p1 = t1.parity(), p2 = t2.parity();
  const SuperScalar half = half_scalar(n, m);
  const SuperCovector g1 = gamma_eval(a, t1);
  SuperCovector res = c_eval(scalar_mul(a, t1), t2);
  res = res - scalar_mul(a, c_eval(t1, t2));
  res = res - gamma_eval(a, frame_bracket(F, t1, t2));
  SuperCovector block = gamma_eval(frame_apply(F, t2, a), t1);
  block = block - frame_lie_cov(F, t2, g1);
  block = block + scalar_mul(half, frame_dscalar(F, pairing(t2, g1)));
  if ((p2 * (p1 + pa)) & 1) block = -block;
  res = res + block;
  SuperCovector tail = scalar_mul(half * pairing_eval(AlgebroidElement(t1), AlgebroidElement(t2)),
                                  frame_dscalar(F, a));
  tail = tail - scalar_mul(half, frame_dscalar(F, frame_apply(F, t1, frame_apply(F, t2, a))));
  if ((pa * (p1 + p2)) & 1) tail = -tail;
  return res + tail;
}

SuperScalar VertexAlgebroidStructure::residual_pairing_invariance(const SuperVector& t1,
                                                                  const SuperVector& t2,
                                                                  const SuperVector& t3) const {
  const Frame& F = frame;
  const int p1 = t1.parity(), p2 = t2.parity(), p3 = t3.parity();
  const Rational half(1, 2);
  const int n = F.n, m = F.m;
  auto pr = [&](const SuperVector& u, const SuperVector& v) {
    return pairing_eval(AlgebroidElement(u), AlgebroidElement(v));
  };
  const int s12 = (p1 * p2) & 1, s3 = (p3 * (p1 + p2)) & 1;
  SuperScalar res = pr(frame_bracket(F, t1, t2), t3);
  SuperScalar t = pr(t2, frame_bracket(F, t1, t3));
  res += s12 ? -t : t;
  res -= frame_apply(F, t1, pr(t2, t3));
  t = SuperScalar::from_rational(n, m, half) * frame_apply(F, t2, pr(t1, t3));
  res += s12 ? -t : t;
  t = SuperScalar::from_rational(n, m, half) * frame_apply(F, t3, pr(t1, t2));
  res += s3 ? -t : t;
  t = pairing(t2, c_eval(t1, t3));
  res -= s12 ? -t : t;
  t = pairing(t3, c_eval(t1, t2));
  res -= s3 ? -t : t;
  return res;
}

SuperCovector VertexAlgebroidStructure::residual_c_closure(const SuperVector& t1,
                                                           const SuperVector& t2,
                                                           const SuperVector& t3) const {
  const Frame& F = frame;
  const int n = F.n, m = F.m;
  const int p1 = t1.parity(), p2 = t2.parity(), p3 = t3.parity();
  const SuperCovector c23 = c_eval(t2, t3);
  const SuperCovector c13 = c_eval(t1, t3);
  const SuperCovector c12 = c_eval(t1, t2);
  const SuperVector b12 = frame_bracket(F, t1, t2);
  const SuperVector b13 = frame_bracket(F, t1, t3);
  const SuperVector b23 = frame_bracket(F, t2, t3);

  SuperCovector dlie = frame_lie_cov(F, t1, c23);
  SuperCovector t = frame_lie_cov(F, t2, c13);
  dlie = ((p1 * p2) & 1) ? dlie + t : dlie - t;
  t = frame_lie_cov(F, t3, c12);
  dlie = ((p3 * (p1 + p2)) & 1) ? dlie - t : dlie + t;
  dlie = dlie - c_eval(b12, t3);
  t = c_eval(b13, t2);
  dlie = ((p2 * p3) & 1) ? dlie - t : dlie + t;
  t = c_eval(b23, t1);
  dlie = ((p1 * (p2 + p3)) & 1) ? dlie + t : dlie - t;

  auto pr = [&](const SuperVector& u, const SuperVector& v) {
    return pairing_eval(AlgebroidElement(u), AlgebroidElement(v));
  };
  SuperScalar brace = pr(b12, t3);
  SuperScalar s = pr(b13, t2);
  brace += ((p2 * p3) & 1) ? -s : s;
  s = pr(b23, t1);
  brace -= ((p1 * (p2 + p3)) & 1) ? -s : s;
  brace -= frame_apply(F, t1, pr(t2, t3));
  s = frame_apply(F, t2, pr(t1, t3));
  brace += ((p1 * p2) & 1) ? -s : s;
  s = SuperScalar::from_rational(n, m, Rational(2)) * pairing(t3, c12);
  brace -= ((p3 * (p1 + p2)) & 1) ? -s : s;

  return dlie + scalar_mul(half_scalar(n, m), frame_dscalar(F, brace));
}

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

int rnd_int(std::mt19937_64& r, int lo, int hi) {
  return lo + static_cast<int>(r() % static_cast<uint64_t>(hi - lo + 1));
}

RatFunc rnd_rf(std::mt19937_64& r, int n) {
  RatFunc acc(n);
  const int terms = rnd_int(r, 1, 2);
  for (int t = 0; t < terms; ++t) {
    int c = rnd_int(r, -3, 3);
    if (c == 0) c = 1;
    RatFunc term = RatFunc::constant(n, Rational(c));
    const int deg = rnd_int(r, 0, 2);
    for (int d = 0; d < deg; ++d) term *= RatFunc::variable(n, rnd_int(r, 0, n - 1));
    acc += term;
  }
  if (rnd_int(r, 0, 3) == 0)
    acc = acc / (RatFunc::variable(n, rnd_int(r, 0, n - 1)) +
                 RatFunc::constant(n, Rational(rnd_int(r, 1, 2))));
  return acc;
}

SuperScalar rnd_lambda0(std::mt19937_64& r, int n, int m) {
  return SuperScalar::from_ratfunc(rnd_rf(r, n), m);
}

SuperScalar rnd_lambda1(std::mt19937_64& r, int n, int m) {
  SuperScalar s(n, m);
  s.add_term(1u << rnd_int(r, 0, m - 1), rnd_rf(r, n));
  if (m > 1 && rnd_int(r, 0, 1)) s.add_term(1u << rnd_int(r, 0, m - 1), rnd_rf(r, n));
  return s;
}

// Even derivation-type element inside the tabulated shapes: generator-free
// coefficients on the derivation slots, one-generator coefficients on the odd
// slots (the latter only when allowed).
SuperVector rnd_even_vec(std::mt19937_64& r, int n, int m, bool with_odd_slots) {
  SuperVector v(n, m);
  for (int i = 0; i < n; ++i)
    if (rnd_int(r, 0, 1)) v.a[i] = rnd_lambda0(r, n, m);
  if (with_odd_slots && m > 0)
    for (int mu = 0; mu < m; ++mu)
      if (rnd_int(r, 0, 1)) v.b[mu] = rnd_lambda1(r, n, m);
  if (v.is_zero()) v.a[0] = rnd_lambda0(r, n, m);
  return v;
}

SuperVector rnd_odd_vec(std::mt19937_64& r, int n, int m) {
  SuperVector v(n, m);
  for (int mu = 0; mu < m; ++mu)
    if (rnd_int(r, 0, 1)) v.b[mu] = rnd_lambda0(r, n, m);
  if (v.is_zero()) v.b[rnd_int(r, 0, m - 1)] = rnd_lambda0(r, n, m);
  return v;
}

SuperVector rnd_vec(std::mt19937_64& r, int n, int m, int parity, bool with_odd_slots) {
  return (parity & 1) && m > 0 ? rnd_odd_vec(r, n, m) : rnd_even_vec(r, n, m, with_odd_slots);
}

std::vector<std::string> default_names(int k, const char* stem) {
  std::vector<std::string> v;
  for (int i = 1; i <= k; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace

std::vector<AxiomCheck> verify_axioms(const VertexAlgebroidStructure& S, uint64_t seed,
                                      int samples) {
  const int n = S.frame.n, m = S.frame.m;
  const auto xn = default_names(n, "x");
  const auto pn = default_names(m, "phi");
  std::vector<AxiomCheck> out;

  {
    AxiomCheck ck{"A1", true, samples, ""};
    std::mt19937_64 r(mix(seed, 1));
    for (int k = 0; k < samples && ck.ok; ++k) {
      const int cfg = m > 0 ? k % 3 : 0;
      SuperScalar a = cfg == 2 ? rnd_lambda1(r, n, m) : rnd_lambda0(r, n, m);
      SuperScalar b = cfg == 1 ? rnd_lambda1(r, n, m) : rnd_lambda0(r, n, m);
      // a one-generator b forces generator-free slot coefficients on t
      SuperVector t = rnd_vec(r, n, m, k % 2, cfg != 1);
      const SuperCovector res = S.residual_gamma_module(a, b, t);
      if (!res.is_zero()) {
        ck.ok = false;
        ck.witness = "sample " + std::to_string(k) + ": a = " + a.to_string(xn, pn) +
                     "; b = " + b.to_string(xn, pn) + "; t = " + to_string(t, xn, pn);
      }
    }
    out.push_back(ck);
  }
  {
    AxiomCheck ck{"A2", true, samples, ""};
    std::mt19937_64 r(mix(seed, 2));
    for (int k = 0; k < samples && ck.ok; ++k) {
      const SuperScalar a = rnd_lambda0(r, n, m);
      const SuperVector t1 = rnd_vec(r, n, m, k % 2, true);
      const SuperVector t2 = rnd_vec(r, n, m, (k / 2) % 2, true);
      const SuperScalar res = S.residual_pairing_module(a, t1, t2);
      if (!res.is_zero()) {
        ck.ok = false;
        ck.witness = "sample " + std::to_string(k) + ": a = " + a.to_string(xn, pn) +
                     "; t1 = " + to_string(t1, xn, pn) + "; t2 = " + to_string(t2, xn, pn);
      }
    }
    out.push_back(ck);
  }
  {
    AxiomCheck ck{"A3", true, samples, ""};
    std::mt19937_64 r(mix(seed, 3));
    for (int k = 0; k < samples && ck.ok; ++k) {
      const SuperScalar a = rnd_lambda0(r, n, m);
      const SuperVector t1 = rnd_vec(r, n, m, k % 2, true);
      const SuperVector t2 = rnd_vec(r, n, m, (k / 2) % 2, true);
      const SuperCovector res = S.residual_c_module(a, t1, t2);
      if (!res.is_zero()) {
        ck.ok = false;
        ck.witness = "sample " + std::to_string(k) + ": a = " + a.to_string(xn, pn) +
                     "; t1 = " + to_string(t1, xn, pn) + "; t2 = " + to_string(t2, xn, pn);
      }
    }
    out.push_back(ck);
  }
  {
    AxiomCheck ck{"A4", true, samples, ""};
    std::mt19937_64 r(mix(seed, 4));
    for (int k = 0; k < samples && ck.ok; ++k) {
      const SuperVector t1 = rnd_vec(r, n, m, k % 2, true);
      const SuperVector t2 = rnd_vec(r, n, m, (k / 2) % 2, true);
      const SuperVector t3 = rnd_vec(r, n, m, (k / 4) % 2, true);
      const SuperScalar res = S.residual_pairing_invariance(t1, t2, t3);
      if (!res.is_zero()) {
        ck.ok = false;
        ck.witness = "sample " + std::to_string(k) + ": t1 = " + to_string(t1, xn, pn) +
                     "; t2 = " + to_string(t2, xn, pn) + "; t3 = " + to_string(t3, xn, pn);
      }
    }
    out.push_back(ck);
  }
  {
    AxiomCheck ck{"A5", true, samples, ""};
    std::mt19937_64 r(mix(seed, 5));
    for (int k = 0; k < samples && ck.ok; ++k) {
      const SuperVector t1 = rnd_vec(r, n, m, k % 2, true);
      const SuperVector t2 = rnd_vec(r, n, m, (k / 2) % 2, true);
      const SuperVector t3 = rnd_vec(r, n, m, (k / 4) % 2, true);
      const SuperCovector res = S.residual_c_closure(t1, t2, t3);
      if (!res.is_zero()) {
        ck.ok = false;
        ck.witness = "sample " + std::to_string(k) + ": t1 = " + to_string(t1, xn, pn) +
                     "; t2 = " + to_string(t2, xn, pn) + "; t3 = " + to_string(t3, xn, pn);
      }
    }
    out.push_back(ck);
  }
  return out;
}

}  // namespace vaw
