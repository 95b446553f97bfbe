#pragma once

#include <map>
#include <vector>

#include "super/elements.hpp"

namespace vaw {

// All sorted direction tuples of length k over the 0..n+m-1 direction index
// space (0..n-1 the even directions, n..n+m-1 the odd ones): even directions
// strictly increasing, odd directions may repeat.
std::vector<std::vector<int>> canonical_tuples(int n, int m, int k);

// Polylinear differential form of degree k (0 <= k <= 4), stored through the
// one-form-valued picture: a degree-k form is a (k-1)-linear map from vector
// fields to one-forms, determined by its values on canonical basis tuples.
// A degree-0 form is a plain function, a degree-1 form a plain one-form.
//
// The parity flag is the intrinsic parity of the form; the stored value on a
// tuple D must be homogeneous of parity p(form) + sum of direction parities.
class PolyForm {
 public:
  PolyForm(int n = 0, int m = 0, int deg = 0, int parity = 0);

  int n() const { return n_; }
  int m() const { return m_; }
  int deg() const { return deg_; }
  int parity() const { return parity_; }

  static PolyForm from_scalar(const SuperScalar& s);                 // degree 0
  static PolyForm from_covector(const SuperCovector& w, int parity);  // degree 1

  const SuperScalar& scalar() const;  // degree 0 only
  SuperCovector value(const std::vector<int>& tuple) const;
  void set_value(const std::vector<int>& tuple, const SuperCovector& v);
  const std::map<std::vector<int>, SuperCovector>& values() const { return vals_; }

  bool is_zero() const;
  PolyForm operator-() const;
  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  bool operator==(const PolyForm& o) const;
  bool operator!=(const PolyForm& o) const { return !(*this == o); }

  // Multilinear evaluation on arbitrary vector arguments (deg-1 of them):
  // coefficients are pulled out to the left of the form with Koszul signs,
  // then the basis tuple is brought to canonical order.
  SuperCovector eval(const std::vector<SuperVector>& args) const;

  // Projection onto genuine differential forms: the function
  // H = <e_1, h(e_2, ..., e_k)> must be skew under all permutations of the
  // k slots including the pairing slot.  Argument slots swap with the plain
  // Koszul sign -(-1)^{pa pb}; moving a direction into or out of the pairing
  // slot additionally costs (-1)^{p(form) pa}.  Equivalently,
  // (-1)^{p(form)(p_2+...+p_k)} H is classically graded-skew.  Stored tuple
  // data only constrains slots 2..k, so freshly assembled data must pass
  // through this projector; the structural operations (d, contract,
  // lie_eval) preserve the skew subspace.
  PolyForm skew_project() const;

  // Exterior differential (degree k -> k+1).  On a degree-0 form this is
  // minus the universal derivation; in higher degree the alternating-sum
  // formula, whose commutator terms vanish on constant basis tuples.
  PolyForm d() const;

  // Convolution with a vector field per the complex's contraction operator:
  // degree k >= 2 -> degree k-1 form.  Degree 1 has two flavors: the public
  // plain pairing (contract_scalar) and the sign-adjusted one used by the
  // Cartan identity (iota_cartan), which is -<tau, .> in degree 1.
  PolyForm contract(const SuperVector& tau) const;
  SuperScalar contract_scalar(const SuperVector& tau) const;
  PolyForm iota_cartan(const SuperVector& tau) const;

  // Lie action of a homogeneous vector field, evaluated on given arguments.
  SuperCovector lie_eval(const SuperVector& tau, const std::vector<SuperVector>& args) const;

 private:
  int n_, m_, deg_, parity_;
  SuperScalar scalar_;
  std::map<std::vector<int>, SuperCovector> vals_;

  void check_tuple(const std::vector<int>& tuple, size_t len) const;
};

}  // namespace vaw
