#include "super/form.hpp"

#include <algorithm>
#include <functional>

#include "kernel/error.hpp"

namespace vaw {

namespace {
int dir_parity(int dir, int n) { return dir >= n ? 1 : 0; }

SuperVector unit_dir(int n, int m, int dir) {
  return dir < n ? SuperVector::unit_tau(n, m, dir) : SuperVector::unit_psi(n, m, dir - n);
}
}  // namespace

std::vector<std::vector<int>> canonical_tuples(int n, int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int d = start; d < n + m; ++d) {
      cur.push_back(d);
      rec(d < n ? d + 1 : d);  // even directions never repeat
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

PolyForm::PolyForm(int n, int m, int deg, int parity)
    : n_(n), m_(m), deg_(deg), parity_(parity & 1), scalar_(n, m) {
  if (deg < 0 || deg > 4) throw DomainError("form degree out of supported range 0..4");
}

PolyForm PolyForm::from_scalar(const SuperScalar& s) {
  PolyForm f(s.n(), s.m(), 0, s.parity());
  f.scalar_ = s;
  return f;
}

PolyForm PolyForm::from_covector(const SuperCovector& w, int parity) {
  PolyForm f(w.n(), w.m(), 1, parity);
  f.set_value({}, w);
  return f;
}

const SuperScalar& PolyForm::scalar() const {
  if (deg_ != 0) throw Error("scalar() on a positive-degree form");
  return scalar_;
}

void PolyForm::check_tuple(const std::vector<int>& tuple, size_t len) const {
  if (tuple.size() != len) throw Error("form tuple arity mismatch");
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= n_ + m_) throw Error("form tuple direction out of range");
    if (i > 0) {
      if (tuple[i - 1] > tuple[i]) throw Error("form tuple not sorted");
      if (tuple[i - 1] == tuple[i] && tuple[i] < n_)
        throw Error("form tuple repeats an even direction");
    }
  }
}

SuperCovector PolyForm::value(const std::vector<int>& tuple) const {
  if (deg_ < 1) throw Error("value() on a degree-0 form");
  check_tuple(tuple, static_cast<size_t>(deg_ - 1));
  auto it = vals_.find(tuple);
  return it == vals_.end() ? SuperCovector(n_, m_) : it->second;
}

void PolyForm::set_value(const std::vector<int>& tuple, const SuperCovector& v) {
  if (deg_ < 1) throw Error("set_value() on a degree-0 form");
  check_tuple(tuple, static_cast<size_t>(deg_ - 1));
  if (v.is_zero()) {
    vals_.erase(tuple);
    return;
  }
  int want = parity_;
  for (int d : tuple) want ^= dir_parity(d, n_);
  if (v.parity() != want) throw Error("form value violates the parity pattern");
  vals_[tuple] = v;
}

bool PolyForm::is_zero() const { return deg_ == 0 ? scalar_.is_zero() : vals_.empty(); }

PolyForm PolyForm::operator-() const {
  PolyForm r = *this;
  if (deg_ == 0) {
    r.scalar_ = -r.scalar_;
    return r;
  }
  for (auto& [k, v] : r.vals_) v = -v;
  return r;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (n_ != o.n_ || m_ != o.m_ || deg_ != o.deg_) throw Error("form shape mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (parity_ != o.parity_) throw Error("form parity mismatch");
  PolyForm r = *this;
  if (deg_ == 0) {
    r.scalar_ += o.scalar_;
    return r;
  }
  for (const auto& [k, v] : o.vals_) {
    SuperCovector s = r.value(k) + v;
    if (s.is_zero())
      r.vals_.erase(k);
    else
      r.vals_[k] = s;
  }
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

bool PolyForm::operator==(const PolyForm& o) const {
  if (n_ != o.n_ || m_ != o.m_ || deg_ != o.deg_) return false;
  if (is_zero() && o.is_zero()) return true;
  if (deg_ == 0) return scalar_ == o.scalar_;
  return parity_ == o.parity_ && vals_ == o.vals_;
}

SuperCovector PolyForm::eval(const std::vector<SuperVector>& args) const {
  if (deg_ < 1) throw Error("eval on a degree-0 form");
  const int k = deg_ - 1;
  if (static_cast<int>(args.size()) != k) throw Error("eval arity mismatch");
  if (k == 0) return value({});
  SuperCovector out(n_, m_);

  // homogeneous options per slot: direction, coefficient, coefficient parity
  struct Opt {
    int dir;
    SuperScalar c;
    int pc;
  };
  std::vector<std::vector<Opt>> opts(k);
  for (int j = 0; j < k; ++j) {
    auto push = [&](int dir, const SuperScalar& x) {
      const SuperScalar e = x.even_part(), o = x.odd_part();
      if (!e.is_zero()) opts[j].push_back({dir, e, 0});
      if (!o.is_zero()) opts[j].push_back({dir, o, 1});
    };
    for (int i = 0; i < n_; ++i) push(i, args[j].a[i]);
    for (int al = 0; al < m_; ++al) push(n_ + al, args[j].b[al]);
    if (opts[j].empty()) return out;
  }

  std::vector<int> pick(k, 0);
  // sexp accumulates the Koszul cost of pulling each coefficient to the far
  // left: past the form and past the basis directions already placed.
  std::function<void(int, int, int)> rec = [&](int j, int sumdirpar, int sexp) {
    if (j == k) {
      std::vector<int> dirs(k);
      for (int l = 0; l < k; ++l) dirs[l] = opts[l][pick[l]].dir;
      int sgn_exp = sexp;
      for (int hi = 1; hi < k; ++hi)
        for (int lo = hi; lo > 0 && dirs[lo - 1] > dirs[lo]; --lo) {
          const int pa = dir_parity(dirs[lo - 1], n_);
          const int pb = dir_parity(dirs[lo], n_);
          // argument slots swap with the plain Koszul sign -(-1)^{pa*pb};
          // only the pairing slot carries the extra p(form) twist
          sgn_exp += 1 + pa * pb;
          std::swap(dirs[lo - 1], dirs[lo]);
        }
      for (int l = 0; l + 1 < k; ++l)
        if (dirs[l] == dirs[l + 1] && dirs[l] < n_) return;
      auto it = vals_.find(dirs);
      if (it == vals_.end()) return;
      SuperScalar prod = opts[0][pick[0]].c;
      for (int l = 1; l < k; ++l) prod = prod * opts[l][pick[l]].c;
      if (prod.is_zero()) return;
      SuperCovector t = scalar_mul(prod, it->second);
      out = out + ((sgn_exp & 1) ? -t : t);
      return;
    }
    for (size_t i = 0; i < opts[j].size(); ++i) {
      pick[j] = static_cast<int>(i);
      const Opt& op = opts[j][i];
      rec(j + 1, sumdirpar + dir_parity(op.dir, n_),
          sexp + op.pc * ((parity_ + sumdirpar) & 1));
    }
  };
  rec(0, 0, 0);
  return out;
}

PolyForm PolyForm::skew_project() const {
  if (deg_ <= 1) return *this;
  const int k = deg_;
  // full skew function on basis direction tuples
  auto H = [&](const std::vector<int>& dirs) -> SuperScalar {
    std::vector<SuperVector> rest;
    rest.reserve(dirs.size() - 1);
    for (size_t j = 1; j < dirs.size(); ++j) rest.push_back(unit_dir(n_, m_, dirs[j]));
    return pairing(unit_dir(n_, m_, dirs[0]), eval(rest));
  };
  Rational fact = 1;
  for (int j = 2; j <= k; ++j) fact *= j;
  const SuperScalar inv_fact = SuperScalar::from_rational(n_, m_, Rational(1) / fact);

  PolyForm r(n_, m_, deg_, parity_);
  for (const auto& T : canonical_tuples(n_, m_, k - 1)) {
    SuperCovector V(n_, m_);
    for (int first = 0; first < n_ + m_; ++first) {
      std::vector<int> full;
      full.reserve(k);
      full.push_back(first);
      for (int d : T) full.push_back(d);
      // average the signed values of H over all slot permutations
      std::vector<int> idx(k);
      for (int j = 0; j < k; ++j) idx[j] = j;
      SuperScalar acc(n_, m_);
      do {
        std::vector<int> dirs(k);
        for (int j = 0; j < k; ++j) dirs[j] = full[idx[j]];
        // sign from permuting the slots of the identity arrangement into
        // idx-order: plain Koszul cost of the rearrangement, plus the
        // p(form) twist for whichever directions enter or leave the
        // pairing slot (slot 0)
        std::vector<int> p = idx;
        std::vector<int> dd = dirs;
        int sexp = parity_ * (dir_parity(dirs[0], n_) + dir_parity(full[0], n_));
        for (size_t hi = 1; hi < p.size(); ++hi)
          for (size_t lo = hi; lo > 0 && p[lo - 1] > p[lo]; --lo) {
            const int pa = dir_parity(dd[lo - 1], n_);
            const int pb = dir_parity(dd[lo], n_);
            sexp += 1 + pa * pb;
            std::swap(p[lo - 1], p[lo]);
            std::swap(dd[lo - 1], dd[lo]);
          }
        const SuperScalar val = H(dirs);
        acc += (sexp & 1) ? -val : val;
      } while (std::next_permutation(idx.begin(), idx.end()));
      const SuperScalar avg = inv_fact * acc;
      if (first < n_)
        V.c[first] = avg;
      else
        V.d[first - n_] = avg.shat();
    }
    if (!V.is_zero()) r.set_value(T, V);
  }
  return r;
}

PolyForm PolyForm::d() const {
  if (deg_ == 0) {
    PolyForm r(n_, m_, 1, parity_);
    r.set_value({}, -dscalar(scalar_));
    return r;
  }
  PolyForm r(n_, m_, deg_ + 1, parity_);
  for (const auto& T : canonical_tuples(n_, m_, deg_)) {
    SuperCovector V(n_, m_);
    int run_par = 0;
    for (int j = 0; j < deg_; ++j) {
      const int pe = dir_parity(T[j], n_);
      std::vector<int> rest = T;
      rest.erase(rest.begin() + j);
      const SuperCovector inner = value(rest);
      if (!inner.is_zero()) {
        const SuperCovector L = lie_cov(unit_dir(n_, m_, T[j]), inner);
        const int sexp = j + pe * ((parity_ + run_par) & 1);
        V = V + ((sexp & 1) ? -L : L);
      }
      run_par += pe;
    }
    {
      std::vector<int> rest(T.begin() + 1, T.end());
      const SuperScalar pr = pairing(unit_dir(n_, m_, T[0]), value(rest));
      if (!pr.is_zero()) {
        const SuperCovector D = dscalar(pr);
        const int sexp = 1 + parity_ * dir_parity(T[0], n_);
        V = V + ((sexp & 1) ? -D : D);
      }
    }
    if (!V.is_zero()) r.set_value(T, V);
  }
  return r;
}

PolyForm PolyForm::contract(const SuperVector& tau) const {
  if (deg_ < 2) throw DomainError("contraction needs form degree >= 2");
  const int pt = tau.parity();
  PolyForm r(n_, m_, deg_ - 1, (parity_ + pt) & 1);
  for (const auto& S : canonical_tuples(n_, m_, deg_ - 2)) {
    std::vector<SuperVector> args;
    args.reserve(S.size() + 1);
    args.push_back(tau);
    for (int d : S) args.push_back(unit_dir(n_, m_, d));
    SuperCovector v = eval(args);
    if (pt & parity_ & 1) v = -v;  // (-1)^{p(tau) p(form)}
    if (!v.is_zero()) r.set_value(S, v);
  }
  return r;
}

SuperScalar PolyForm::contract_scalar(const SuperVector& tau) const {
  if (deg_ != 1) throw DomainError("scalar contraction needs form degree 1");
  return pairing(tau, value({}));
}

PolyForm PolyForm::iota_cartan(const SuperVector& tau) const {
  if (deg_ >= 2) return contract(tau);
  if (deg_ == 1) return from_scalar(-pairing(tau, value({})));
  throw DomainError("no contraction below degree 1");
}

SuperCovector PolyForm::lie_eval(const SuperVector& tau,
                                 const std::vector<SuperVector>& args) const {
  const int pt = tau.parity();
  SuperCovector r = lie_cov(tau, deg_ == 1 ? value({}) : eval(args));
  // each bracket insertion costs the Koszul sign of carrying tau past the
  // form itself and then past the arguments in front of the insertion slot
  int run = parity_;
  for (size_t j = 0; j < args.size(); ++j) {
    std::vector<SuperVector> mod = args;
    mod[j] = bracket(tau, args[j]);
    SuperCovector t = eval(mod);
    if ((pt * run) & 1) t = -t;
    r = r - t;
    run += args[j].parity();
  }
  return r;
}

}  // namespace vaw
