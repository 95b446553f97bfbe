#include "kernel/series.hpp"

#include <climits>

#include "kernel/error.hpp"

namespace vaw {

UQSeries UQSeries::term(int qmax, int qexp, int uexp, const Rational& c) {
  UQSeries s(qmax);
  s.add_term(qexp, uexp, c);
  return s;
}

void UQSeries::add_term(int qexp, int uexp, const Rational& c) {
  if (qexp < 0) throw DomainError("negative q-exponent");
  if (qexp > qmax_ || c == 0) return;
  const auto key = std::make_pair(qexp, uexp);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_[key] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

UQSeries UQSeries::operator-() const {
  UQSeries r(qmax_);
  for (const auto& [k, c] : t_) r.t_[k] = -c;
  return r;
}

UQSeries UQSeries::operator+(const UQSeries& o) const {
  if (qmax_ != o.qmax_) throw Error("series truncation mismatch");
  UQSeries r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

UQSeries UQSeries::operator-(const UQSeries& o) const {
  if (qmax_ != o.qmax_) throw Error("series truncation mismatch");
  UQSeries r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
  return r;
}

UQSeries UQSeries::operator*(const UQSeries& o) const {
  if (qmax_ != o.qmax_) throw Error("series truncation mismatch");
  UQSeries r(qmax_);
  for (const auto& [ka, ca] : t_) {
    for (const auto& [kb, cb] : o.t_) {
      const int q = ka.first + kb.first;
      if (q > qmax_) continue;
      r.add_term(q, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

UQSeries UQSeries::scaled(const Rational& c) const {
  UQSeries r(qmax_);
  if (c == 0) return r;
  for (const auto& [k, v] : t_) r.t_[k] = v * c;
  return r;
}

UQSeries UQSeries::pow(long e) const {
  if (e < 0) throw DomainError("negative series power");
  UQSeries acc = one(qmax_);
  UQSeries b = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

UQSeries UQSeries::invert() const {
  const auto row0 = q_row(0);
  if (row0.size() != 1)
    throw DomainError("series inverse needs a single-monomial q^0 part");
  const int a = row0.begin()->first;
  const Rational c = row0.begin()->second;
  const UQSeries tinv = term(qmax_, 0, -a, Rational(1) / c);
  // S = c u^a (1 + R) with R supported in q >= 1.
  UQSeries minus_r = -(*this * tinv - one(qmax_));
  UQSeries acc = one(qmax_);
  UQSeries pw = one(qmax_);
  for (int k = 1; k <= qmax_; ++k) {
    pw *= minus_r;
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc * tinv;
}

std::map<int, Rational> UQSeries::q_row(int q) const {
  std::map<int, Rational> row;
  for (auto it = t_.lower_bound({q, INT_MIN}); it != t_.end() && it->first.first == q; ++it)
    row[it->first.second] = it->second;
  return row;
}

Rational UQSeries::row_sum_at_u1(int q) const {
  Rational s(0);
  for (const auto& [u, c] : q_row(q)) s += c;
  return s;
}

std::string UQSeries::row_to_string(int q) const {
  const auto row = q_row(q);
  if (row.empty()) return "0";
  bool all_even = true;
  for (const auto& [u, c] : row)
    if (u % 2 != 0) all_even = false;
  std::string out;
  bool first = true;
  for (const auto& [u, c] : row) {
    const bool neg = c < 0;
    const Rational ac = neg ? Rational(-c) : c;
    std::string var;
    const int e = all_even ? u / 2 : u;
    const char* sym = all_even ? "y" : "u";
    if (e == 1)
      var = sym;
    else if (e != 0)
      var = std::string(sym) + "^" + std::to_string(e);
    std::string cs;
    if (var.empty())
      cs = rat_to_string(ac);
    else if (ac == 1)
      cs = var;
    else
      cs = rat_to_string(ac) + "*" + var;
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
