#include "kernel/polynomial.hpp"

#include <algorithm>

#include "kernel/error.hpp"

namespace vaw {

namespace {
void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomial arity mismatch");
}
}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error("variable index out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (is_zero()) return -1;
  long d = 0;
  for (uint32_t e : terms_.rbegin()->first) d += e;
  return d;
}

long Polynomial::degree_in(int var) const {
  if (is_zero()) return -1;
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial p(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, v] : terms_) p.terms_[m] = v * c;
  return p;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    p.add_term(d, c * m[var]);
  }
  return p;
}

Rational Polynomial::eval(const std::vector<Rational>& pt) const {
  if (static_cast<int>(pt.size()) != nvars_) throw Error("eval arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= rat_pow(pt[i], m[i]);
    acc += t;
  }
  return acc;
}

Rational Polynomial::leading_coeff() const {
  if (is_zero()) return Rational(0);
  return terms_.rbegin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

Polynomial Polynomial::coeff_of(int var, uint32_t k) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial r = m;
    r[var] = 0;
    p.terms_[r] = c;
  }
  return p;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  check_same(*this, d);
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  const Monomial& lmd = d.leading_monomial();
  const Rational lcd = d.leading_coeff();
  Polynomial q(nvars_);
  Polynomial r = *this;
  while (!r.is_zero()) {
    const Monomial& lm = r.leading_monomial();
    Monomial qm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (lm[i] < lmd[i]) throw DomainError("polynomial division is not exact");
      qm[i] = lm[i] - lmd[i];
    }
    Polynomial t(nvars_);
    t.terms_[qm] = r.leading_coeff() / lcd;
    q += t;
    r -= t * d;
  }
  return q;
}

void Polynomial::set_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw Error("monomial arity mismatch");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw Error("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Polynomial Polynomial::gcd_list(const std::vector<Polynomial>& ps) {
  Polynomial g = ps.front();
  for (size_t i = 1; i < ps.size(); ++i) {
    if (g.is_constant() && !g.is_zero()) break;
    g = gcd(g, ps[i]);
  }
  return g.monic();
}

Polynomial Polynomial::content_in(int var) const {
  std::vector<Polynomial> cs;
  const long d = degree_in(var);
  for (long k = 0; k <= d; ++k) {
    Polynomial c = coeff_of(var, static_cast<uint32_t>(k));
    if (!c.is_zero()) cs.push_back(c);
  }
  return gcd_list(cs);
}

bool Polynomial::only_var(int var) const {
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (i != var && m[i] != 0) return false;
  return true;
}

// Euclidean gcd for polynomials that involve a single variable; remainders
// are made monic every round to keep coefficient growth tame.
Polynomial Polynomial::gcd_univariate(const Polynomial& a, const Polynomial& b, int var) {
  const int n = a.nvars();
  Polynomial A = a.monic();
  Polynomial B = b.monic();
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  while (!B.is_zero()) {
    const long db = B.degree_in(var);
    Polynomial r = A;
    while (!r.is_zero() && r.degree_in(var) >= db) {
      const long dr = r.degree_in(var);
      Monomial sm(n, 0);
      sm[var] = static_cast<uint32_t>(dr - db);
      Polynomial shift(n);
      shift.set_term(sm, r.coeff_of(var, static_cast<uint32_t>(dr)).constant_value());
      r -= shift * B;
    }
    A = B;
    B = r.monic();
  }
  return A;
}

// Multivariate gcd: content/primitive-part recursion over the main variable
// (the highest one both arguments actually share), subresultant PRS on the
// primitive parts.  The subresultant scaling keeps intermediate coefficients
// polynomially bounded where a naive PRS explodes.
Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int n = a.nvars();
  if (a.is_constant() || b.is_constant()) return constant(n, 1);
  int v = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (a.degree_in(i) > 0 && b.degree_in(i) > 0) {
      v = i;
      break;
    }
  }
  if (v < 0) return constant(n, 1);  // no shared variable: coprime over a field
  if (a.only_var(v) && b.only_var(v)) return gcd_univariate(a, b, v);

  const Polynomial ca = a.content_in(v);
  const Polynomial cb = b.content_in(v);
  Polynomial A = a.divide_exact(ca);
  Polynomial B = b.divide_exact(cb);
  const Polynomial cg = gcd(ca, cb);

  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  Polynomial g = constant(n, 1);
  Polynomial h = constant(n, 1);
  while (true) {
    const long delta = A.degree_in(v) - B.degree_in(v);
    const long db = B.degree_in(v);
    const Polynomial lcB = B.coeff_of(v, static_cast<uint32_t>(db));
    // full pseudo-remainder lc(B)^(delta+1) * A mod B, built lazily: each
    // reduction round multiplies by lc(B) once, the shortfall is topped up
    Polynomial r = A;
    long rounds = 0;
    while (!r.is_zero() && r.degree_in(v) >= db) {
      const long dr = r.degree_in(v);
      const Polynomial lcr = r.coeff_of(v, static_cast<uint32_t>(dr));
      Monomial sm(n, 0);
      sm[v] = static_cast<uint32_t>(dr - db);
      Polynomial shift(n);
      shift.set_term(sm, 1);
      r = lcB * r - lcr * shift * B;
      ++rounds;
    }
    for (long k = rounds; k < delta + 1; ++k) r = r * lcB;
    if (r.is_zero()) {
      const Polynomial gg = B.divide_exact(B.content_in(v));
      return (gg * cg).monic();
    }
    if (r.degree_in(v) == 0) return cg.monic();  // primitive parts coprime in v
    // subresultant scaling: divide by g * h^delta, then update g and h
    Polynomial divisor = g;
    for (long k = 0; k < delta; ++k) divisor = divisor * h;
    A = B;
    B = r.divide_exact(divisor);
    g = A.coeff_of(v, static_cast<uint32_t>(A.degree_in(v)));
    if (delta > 0) {
      Polynomial gd = g;
      for (long k = 1; k < delta; ++k) gd = gd * g;
      Polynomial hd = constant(n, 1);
      for (long k = 1; k < delta; ++k) hd = hd * h;
      h = gd.divide_exact(hd);
    }
  }
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  if (static_cast<int>(names.size()) != nvars_) throw Error("name list arity mismatch");
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->second < 0;
    const Rational ac = neg ? Rational(-it->second) : it->second;
    std::string ms;
    for (int i = 0; i < nvars_; ++i) {
      const uint32_t e = it->first[i];
      if (!e) continue;
      if (!ms.empty()) ms += "*";
      ms += names[i];
      if (e > 1) ms += "^" + std::to_string(e);
    }
    std::string cs;
    if (ms.empty())
      cs = rat_to_string(ac);
    else if (ac == 1)
      cs = ms;
    else
      cs = rat_to_string(ac) + "*" + ms;
    if (first) {
      out = (neg ? "-" : "") + cs;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + cs;
    }
  }
  return out;
}

}  // namespace vaw
