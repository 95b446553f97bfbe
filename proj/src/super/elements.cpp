#include "super/elements.hpp"

#include "kernel/error.hpp"

namespace vaw {

namespace {
template <typename T>
bool all_zero(const std::vector<T>& xs) {
  for (const auto& x : xs)
    if (!x.is_zero()) return false;
  return true;
}
}  // namespace

SuperVector SuperVector::unit_tau(int n, int m, int i) {
  SuperVector v(n, m);
  v.a[i] = SuperScalar::from_rational(n, m, 1);
  return v;
}

SuperVector SuperVector::unit_psi(int n, int m, int alpha) {
  SuperVector v(n, m);
  v.b[alpha] = SuperScalar::from_rational(n, m, 1);
  return v;
}

bool SuperVector::is_zero() const { return all_zero(a) && all_zero(b); }

SuperVector SuperVector::operator-() const {
  SuperVector v = *this;
  for (auto& x : v.a) x = -x;
  for (auto& x : v.b) x = -x;
  return v;
}

SuperVector SuperVector::operator+(const SuperVector& o) const {
  SuperVector v = *this;
  for (int i = 0; i < n(); ++i) v.a[i] += o.a[i];
  for (int i = 0; i < m(); ++i) v.b[i] += o.b[i];
  return v;
}

SuperVector SuperVector::operator-(const SuperVector& o) const { return *this + (-o); }

bool SuperVector::is_homogeneous() const {
  bool has[2] = {false, false};
  for (const auto& x : a) {
    if (x.is_zero()) continue;
    if (!x.is_homogeneous()) return false;
    has[x.parity()] = true;
  }
  for (const auto& x : b) {
    if (x.is_zero()) continue;
    if (!x.is_homogeneous()) return false;
    has[(x.parity() + 1) & 1] = true;
  }
  return !(has[0] && has[1]);
}

int SuperVector::parity() const {
  if (!is_homogeneous()) throw DomainError("vector field has mixed parity");
  for (const auto& x : a)
    if (!x.is_zero()) return x.parity();
  for (const auto& x : b)
    if (!x.is_zero()) return (x.parity() + 1) & 1;
  return 0;
}

SuperVector SuperVector::even_part() const {
  SuperVector v = *this;
  for (auto& x : v.a) x = x.even_part();
  for (auto& x : v.b) x = x.odd_part();
  return v;
}

SuperVector SuperVector::odd_part() const {
  SuperVector v = *this;
  for (auto& x : v.a) x = x.odd_part();
  for (auto& x : v.b) x = x.even_part();
  return v;
}

SuperCovector SuperCovector::unit_om(int n, int m, int i) {
  SuperCovector w(n, m);
  w.c[i] = SuperScalar::from_rational(n, m, 1);
  return w;
}

SuperCovector SuperCovector::unit_rho(int n, int m, int alpha) {
  SuperCovector w(n, m);
  w.d[alpha] = SuperScalar::from_rational(n, m, 1);
  return w;
}

bool SuperCovector::is_zero() const { return all_zero(c) && all_zero(d); }

SuperCovector SuperCovector::operator-() const {
  SuperCovector w = *this;
  for (auto& x : w.c) x = -x;
  for (auto& x : w.d) x = -x;
  return w;
}

SuperCovector SuperCovector::operator+(const SuperCovector& o) const {
  SuperCovector w = *this;
  for (int i = 0; i < n(); ++i) w.c[i] += o.c[i];
  for (int i = 0; i < m(); ++i) w.d[i] += o.d[i];
  return w;
}

SuperCovector SuperCovector::operator-(const SuperCovector& o) const { return *this + (-o); }

bool SuperCovector::is_homogeneous() const {
  bool has[2] = {false, false};
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    if (!x.is_homogeneous()) return false;
    has[x.parity()] = true;
  }
  for (const auto& x : d) {
    if (x.is_zero()) continue;
    if (!x.is_homogeneous()) return false;
    has[(x.parity() + 1) & 1] = true;
  }
  return !(has[0] && has[1]);
}

int SuperCovector::parity() const {
  if (!is_homogeneous()) throw DomainError("one-form has mixed parity");
  for (const auto& x : c)
    if (!x.is_zero()) return x.parity();
  for (const auto& x : d)
    if (!x.is_zero()) return (x.parity() + 1) & 1;
  return 0;
}

SuperCovector SuperCovector::even_part() const {
  SuperCovector w = *this;
  for (auto& x : w.c) x = x.even_part();
  for (auto& x : w.d) x = x.odd_part();
  return w;
}

SuperCovector SuperCovector::odd_part() const {
  SuperCovector w = *this;
  for (auto& x : w.c) x = x.odd_part();
  for (auto& x : w.d) x = x.even_part();
  return w;
}

namespace {
// Derivation along slot q: the coordinate partial when no table is given,
// otherwise the table row sum_p W(q, p) d/dx_p acting coefficient-wise.
SuperScalar tau_slot(const RatMatrix* W, int q, const SuperScalar& f) {
  if (!W) return f.tau(q);
  SuperScalar r(f.n(), f.m());
  for (int p = 0; p < f.n(); ++p) {
    const RatFunc& w = W->at(q, p);
    if (!w.is_zero()) r += SuperScalar::from_ratfunc(w, f.m()) * f.tau(p);
  }
  return r;
}

SuperScalar apply_w(const RatMatrix* W, const SuperVector& v, const SuperScalar& f) {
  SuperScalar r(v.n(), v.m());
  for (int i = 0; i < v.n(); ++i)
    if (!v.a[i].is_zero()) r += v.a[i] * tau_slot(W, i, f);
  for (int al = 0; al < v.m(); ++al)
    if (!v.b[al].is_zero()) r += v.b[al] * f.psi(al);
  return r;
}
}  // namespace

SuperScalar apply(const SuperVector& v, const SuperScalar& f) { return apply_w(nullptr, v, f); }

SuperScalar apply(const RatMatrix& W, const SuperVector& v, const SuperScalar& f) {
  return apply_w(&W, v, f);
}

SuperVector scalar_mul(const SuperScalar& f, const SuperVector& v) {
  SuperVector r = v;
  for (auto& x : r.a) x = f * x;
  for (auto& x : r.b) x = f * x;
  return r;
}

SuperCovector scalar_mul(const SuperScalar& f, const SuperCovector& w) {
  SuperCovector r = w;
  for (auto& x : r.c) x = f * x;
  for (auto& x : r.d) x = f * x;
  return r;
}

SuperCovector scalar_mul_right(const SuperCovector& w, const SuperScalar& f) {
  SuperCovector r = w;
  for (auto& x : r.c) x = x * f;
  for (auto& x : r.d) x = x * f.shat();
  return r;
}

namespace {
SuperVector bracket_h(const RatMatrix* W, const SuperVector& v, const SuperVector& w, int pv,
                      int pw) {
  const int n = v.n(), m = v.m();
  const bool flip = (pv & pw & 1) != 0;
  SuperVector r(n, m);
  for (int i = 0; i < n; ++i) {
    SuperScalar t = apply_w(W, v, w.a[i]);
    SuperScalar u = apply_w(W, w, v.a[i]);
    r.a[i] = flip ? t + u : t - u;
  }
  for (int al = 0; al < m; ++al) {
    SuperScalar t = apply_w(W, v, w.b[al]);
    SuperScalar u = apply_w(W, w, v.b[al]);
    r.b[al] = flip ? t + u : t - u;
  }
  return r;
}

SuperVector bracket_w(const RatMatrix* W, const SuperVector& v, const SuperVector& w) {
  const SuperVector ve = v.even_part(), vo = v.odd_part();
  const SuperVector we = w.even_part(), wo = w.odd_part();
  SuperVector r(v.n(), v.m());
  if (!ve.is_zero() && !we.is_zero()) r = r + bracket_h(W, ve, we, 0, 0);
  if (!ve.is_zero() && !wo.is_zero()) r = r + bracket_h(W, ve, wo, 0, 1);
  if (!vo.is_zero() && !we.is_zero()) r = r + bracket_h(W, vo, we, 1, 0);
  if (!vo.is_zero() && !wo.is_zero()) r = r + bracket_h(W, vo, wo, 1, 1);
  return r;
}
}  // namespace

SuperVector bracket(const SuperVector& v, const SuperVector& w) {
  return bracket_w(nullptr, v, w);
}

SuperVector bracket(const RatMatrix& W, const SuperVector& v, const SuperVector& w) {
  return bracket_w(&W, v, w);
}

SuperScalar pairing(const SuperVector& v, const SuperCovector& w) {
  SuperScalar r(v.n(), v.m());
  for (int i = 0; i < v.n(); ++i) r += v.a[i] * w.c[i];
  for (int al = 0; al < v.m(); ++al) r += v.b[al] * w.d[al].shat();
  return r;
}

namespace {
SuperCovector dscalar_w(const RatMatrix* W, const SuperScalar& f) {
  SuperCovector w(f.n(), f.m());
  for (int i = 0; i < f.n(); ++i) w.c[i] = tau_slot(W, i, f);
  for (int al = 0; al < f.m(); ++al) w.d[al] = f.psi(al).shat();
  return w;
}
}  // namespace

SuperCovector dscalar(const SuperScalar& f) { return dscalar_w(nullptr, f); }

SuperCovector dscalar(const RatMatrix& W, const SuperScalar& f) { return dscalar_w(&W, f); }

namespace {
SuperCovector lie_cov_h(const RatMatrix* W, const SuperVector& v, const SuperCovector& w, int pv) {
  const int n = v.n(), m = v.m();
  SuperCovector r(n, m);
  for (int p = 0; p < n; ++p) {
    const SuperVector e = SuperVector::unit_tau(n, m, p);
    r.c[p] = apply_w(W, v, w.c[p]) - pairing(bracket_w(W, v, e), w);
  }
  for (int mu = 0; mu < m; ++mu) {
    const SuperVector e = SuperVector::unit_psi(n, m, mu);
    SuperScalar t = apply_w(W, v, w.d[mu].shat()) - pairing(bracket_w(W, v, e), w);
    if (pv & 1) t = -t;
    r.d[mu] = t.shat();
  }
  return r;
}

SuperCovector lie_cov_w(const RatMatrix* W, const SuperVector& v, const SuperCovector& w) {
  const SuperVector ve = v.even_part(), vo = v.odd_part();
  SuperCovector r(v.n(), v.m());
  if (!ve.is_zero()) r = r + lie_cov_h(W, ve, w, 0);
  if (!vo.is_zero()) r = r + lie_cov_h(W, vo, w, 1);
  return r;
}
}  // namespace

SuperCovector lie_cov(const SuperVector& v, const SuperCovector& w) {
  return lie_cov_w(nullptr, v, w);
}

SuperCovector lie_cov(const RatMatrix& W, const SuperVector& v, const SuperCovector& w) {
  return lie_cov_w(&W, v, w);
}

std::string to_string(const SuperVector& v, const std::vector<std::string>& xnames,
                      const std::vector<std::string>& pnames) {
  std::string out;
  for (int i = 0; i < v.n(); ++i)
    if (!v.a[i].is_zero())
      out += (out.empty() ? "" : " + ") + ("[" + v.a[i].to_string(xnames, pnames) + "]*tau" +
                                           std::to_string(i + 1));
  for (int al = 0; al < v.m(); ++al)
    if (!v.b[al].is_zero())
      out += (out.empty() ? "" : " + ") + ("[" + v.b[al].to_string(xnames, pnames) + "]*psi" +
                                           std::to_string(al + 1));
  return out.empty() ? "0" : out;
}

std::string to_string(const SuperCovector& w, const std::vector<std::string>& xnames,
                      const std::vector<std::string>& pnames) {
  std::string out;
  for (int i = 0; i < w.n(); ++i)
    if (!w.c[i].is_zero())
      out += (out.empty() ? "" : " + ") + ("[" + w.c[i].to_string(xnames, pnames) + "]*om" +
                                           std::to_string(i + 1));
  for (int al = 0; al < w.m(); ++al)
    if (!w.d[al].is_zero())
      out += (out.empty() ? "" : " + ") + ("[" + w.d[al].to_string(xnames, pnames) + "]*rho" +
                                           std::to_string(al + 1));
  return out.empty() ? "0" : out;
}

}  // namespace vaw
