#ifndef QLIE_BIALGEBRA_HPP
#define QLIE_BIALGEBRA_HPP

#include "qlie/tensor.hpp"

namespace qlie {

/// Candidate r-matrix: an arity-2 tensor. Skew-symmetry (membership in
/// Im(1 - twist)) is checked by callers where it matters, not enforced.
class RMatrix {
 public:
  RMatrix() : value_(2) {}
  explicit RMatrix(TensorElement value);

  const TensorElement& value() const { return value_; }
  bool is_skew() const { return in_im_one_minus_tau(value_); }

 private:
  TensorElement value_;
};

/// Coboundary cobracket: x -> x . r.
TensorElement cobracket(const RMatrix& r, const AlgebraElement& x);

/// The Yang-Baxter expression c(r) = [r12,r13] + [r12,r23] + [r13,r23],
/// evaluated componentwise inside the tensor cube: for r = sum_i c_i
/// a_i (x) b_i,
///   c(r) = sum_{i,j} c_i c_j ( [a_i,a_j] (x) b_i (x) b_j
///                            + a_i (x) [b_i,a_j] (x) b_j
///                            + a_i (x) a_j (x) [b_i,b_j] ).
TensorElement cybe_c(const RMatrix& r);

/// Co-Jacobi expression (1 + xi + xi^2)(1 (x) cobracket)(cobracket(x));
/// vanishing for all x makes the cobracket a Lie coalgebra structure.
TensorElement co_jacobi_defect(const RMatrix& r, const AlgebraElement& x);

/// Residual of the coboundary identity
///   (1 + xi + xi^2)(1 (x) D)(D(x)) = x . c(r),
/// identically zero whenever r lies in Im(1 - twist).
TensorElement coboundary_identity_defect(const RMatrix& r, const AlgebraElement& x);

/// D([x,y]) - x.D(y) + y.D(x); identically zero for coboundary D.
TensorElement compatibility_defect(const RMatrix& r, const AlgebraElement& x,
                                   const AlgebraElement& y);

/// True iff x . c(r) = 0 for every basis x of total degree <= max_deg.
bool mybe_check(const RMatrix& r, int max_deg);

}  // namespace qlie

#endif
