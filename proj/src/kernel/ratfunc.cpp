#include "kernel/ratfunc.hpp"

#include "kernel/error.hpp"

namespace vaw {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw Error("rational function arity mismatch");
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.is_one()) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
      const Rational inv = Rational(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r(nvars());
    r.num_ = num_ + o.num_;
    return r;
  }
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r(nvars());
    r.num_ = num_ - o.num_;
    return r;
  }
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r(nvars());
    r.num_ = num_ * o.num_;
    return r;
  }
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero to a negative power");
    return (RatFunc::constant(nvars(), 1) / *this).pow(-e);
  }
  RatFunc acc = RatFunc::constant(nvars(), 1);
  RatFunc b = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

RatFunc RatFunc::partial(int var) const {
  if (den_.is_one()) {
    RatFunc r(nvars());
    r.num_ = num_.derivative(var);
    return r;
  }
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& args) const {
  if (static_cast<int>(args.size()) != nvars()) throw Error("substitute arity mismatch");
  int tn = args.empty() ? 0 : args[0].nvars();
  for (const RatFunc& a : args)
    if (a.nvars() != tn) throw Error("substitute argument arity mismatch");

  auto eval_poly = [&](const Polynomial& p) {
    RatFunc acc(tn);
    for (const auto& [m, c] : p.terms()) {
      RatFunc t = RatFunc::constant(tn, c);
      for (int i = 0; i < nvars(); ++i)
        if (m[i]) t *= args[i].pow(m[i]);
      acc += t;
    }
    return acc;
  };
  const RatFunc dn = eval_poly(den_);
  if (dn.is_zero()) throw DomainError("substitution makes the denominator vanish");
  return eval_poly(num_) / dn;
}

Rational RatFunc::eval(const std::vector<Rational>& pt) const {
  const Rational d = den_.eval(pt);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.eval(pt) / d;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace vaw
