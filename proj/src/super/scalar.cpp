#include "super/scalar.hpp"

#include <bit>

#include "kernel/error.hpp"

namespace vaw {

namespace {
void check_same(const SuperScalar& a, const SuperScalar& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw Error("superscalar context mismatch");
}

// Koszul sign for multiplying the generator products of masks s and t into
// one increasing product: (-1)^{#{(i,j) : i in s, j in t, i > j}}.
int merge_sign(uint32_t s, uint32_t t) {
  int inv = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(s >> i)) break;
    if (s & (1u << i)) inv += std::popcount(t & ((1u << i) - 1u));
  }
  return (inv & 1) ? -1 : 1;
}
}  // namespace

SuperScalar SuperScalar::from_ratfunc(const RatFunc& f, int m) {
  SuperScalar s(f.nvars(), m);
  s.set_term(0, f);
  return s;
}

SuperScalar SuperScalar::from_rational(int n, int m, const Rational& c) {
  return from_ratfunc(RatFunc::constant(n, c), m);
}

SuperScalar SuperScalar::variable(int n, int m, int i) {
  return from_ratfunc(RatFunc::variable(n, i), m);
}

SuperScalar SuperScalar::phi(int n, int m, int alpha) {
  if (alpha < 0 || alpha >= m) throw Error("odd generator index out of range");
  SuperScalar s(n, m);
  s.set_term(1u << alpha, RatFunc::constant(n, 1));
  return s;
}

RatFunc SuperScalar::term(uint32_t mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? RatFunc(n_) : it->second;
}

void SuperScalar::set_term(uint32_t mask, const RatFunc& f) {
  if (f.is_zero())
    c_.erase(mask);
  else
    c_[mask] = f;
}

void SuperScalar::add_term(uint32_t mask, const RatFunc& f) {
  auto it = c_.find(mask);
  if (it == c_.end()) {
    if (!f.is_zero()) c_[mask] = f;
    return;
  }
  it->second += f;
  if (it->second.is_zero()) c_.erase(it);
}

SuperScalar SuperScalar::operator-() const {
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_) r.c_[k] = -f;
  return r;
}

SuperScalar SuperScalar::operator+(const SuperScalar& o) const {
  check_same(*this, o);
  SuperScalar r = *this;
  for (const auto& [k, f] : o.c_) r.add_term(k, f);
  return r;
}

SuperScalar SuperScalar::operator-(const SuperScalar& o) const {
  check_same(*this, o);
  SuperScalar r = *this;
  for (const auto& [k, f] : o.c_) r.add_term(k, -f);
  return r;
}

SuperScalar SuperScalar::operator*(const SuperScalar& o) const {
  check_same(*this, o);
  SuperScalar r(n_, m_);
  for (const auto& [ka, fa] : c_) {
    for (const auto& [kb, fb] : o.c_) {
      if (ka & kb) continue;  // repeated odd generator
      const int sg = merge_sign(ka, kb);
      r.add_term(ka | kb, sg > 0 ? fa * fb : -(fa * fb));
    }
  }
  return r;
}

bool SuperScalar::is_homogeneous() const {
  bool has_even = false, has_odd = false;
  for (const auto& [k, f] : c_) (std::popcount(k) & 1 ? has_odd : has_even) = true;
  return !(has_even && has_odd);
}

int SuperScalar::parity() const {
  if (is_zero()) return 0;
  if (!is_homogeneous()) throw DomainError("superscalar has mixed parity");
  return std::popcount(c_.begin()->first) & 1;
}

SuperScalar SuperScalar::even_part() const {
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_)
    if (!(std::popcount(k) & 1)) r.c_[k] = f;
  return r;
}

SuperScalar SuperScalar::odd_part() const {
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_)
    if (std::popcount(k) & 1) r.c_[k] = f;
  return r;
}

SuperScalar SuperScalar::shat() const {
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_) r.c_[k] = (std::popcount(k) & 1) ? -f : f;
  return r;
}

SuperScalar SuperScalar::tau(int i) const {
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_) r.set_term(k, f.partial(i));
  return r;
}

SuperScalar SuperScalar::psi(int alpha) const {
  const uint32_t bit = 1u << alpha;
  SuperScalar r(n_, m_);
  for (const auto& [k, f] : c_) {
    if (!(k & bit)) continue;
    // strip the generator; sign counts the lower-index generators passed over
    const int below = std::popcount(k & (bit - 1u));
    r.set_term(k & ~bit, (below & 1) ? -f : f);
  }
  return r;
}

std::string SuperScalar::to_string(const std::vector<std::string>& xnames,
                                   const std::vector<std::string>& pnames) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, f] : c_) {
    std::string mono;
    for (int a = 0; a < m_; ++a)
      if (k & (1u << a)) mono += (mono.empty() ? "" : "*") + pnames[a];
    std::string piece = f.to_string(xnames);
    if (!mono.empty()) piece = "(" + piece + ")*" + mono;
    out += (out.empty() ? "" : " + ") + piece;
  }
  return out;
}

}  // namespace vaw
