#include "kernel/matrix.hpp"

#include "kernel/error.hpp"

namespace vaw {

RatMatrix RatMatrix::identity(int n, int nvars) {
  RatMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(nvars, 1);
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  RatMatrix r(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RatFunc& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  const int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n, nvars_);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw SingularError("matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const RatFunc d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const RatFunc f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_, nvars_);
}

RatFunc RatMatrix::trace() const {
  if (rows_ != cols_) throw Error("trace of a non-square matrix");
  RatFunc t(nvars_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix jacobian_frame_matrix(const std::vector<RatFunc>& new_coords) {
  const int n = static_cast<int>(new_coords.size());
  if (n == 0) throw Error("empty coordinate map");
  const int nv = new_coords[0].nvars();
  RatMatrix jac(n, n, nv);
  for (int i = 0; i < n; ++i) {
    if (new_coords[i].nvars() != nv) throw Error("coordinate map arity mismatch");
    for (int j = 0; j < nv && j < n; ++j) jac.at(i, j) = new_coords[i].partial(j);
  }
  if (nv != n) throw Error("coordinate map must be square");
  return jac.inverse().transpose();
}

}  // namespace vaw
