#pragma once

#include <vector>

#include "kernel/ratfunc.hpp"

namespace vaw {

// Dense matrix of rational functions, exact arithmetic throughout.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0), nvars_(0) {}
  RatMatrix(int rows, int cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), a_(static_cast<size_t>(rows) * cols, RatFunc(nvars)) {}
  static RatMatrix identity(int n, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  RatFunc& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const RatFunc& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix transpose() const;
  RatMatrix inverse() const;  // Gauss-Jordan; throws SingularError
  bool is_identity() const;
  RatFunc trace() const;

 private:
  int rows_, cols_, nvars_;
  std::vector<RatFunc> a_;
};

// Frame transition matrix induced by a coordinate map.  `new_coords[i]` is the
// i-th target coordinate written as a function of the source coordinates; with
// J_ij the partial of new_coords[i] by source variable j, the returned matrix
// is (J^{-1})^T, i.e. the matrix expressing the target coordinate derivations
// in terms of the source ones.
RatMatrix jacobian_frame_matrix(const std::vector<RatFunc>& new_coords);

}  // namespace vaw
