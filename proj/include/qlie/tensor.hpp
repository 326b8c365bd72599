#ifndef QLIE_TENSOR_HPP
#define QLIE_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "qlie/algebra.hpp"

namespace qlie {

/// A basis tensor: an n-tuple of basis elements.
using TensorKey = std::vector<BasisElement>;

/// Order on basis tuples: total degree over all slots first, then
/// slotwise canonical order. Keeps serialization deterministic.
struct TensorKeyLess {
  bool operator()(const TensorKey& a, const TensorKey& b) const;
};

/// Sparse element of the n-fold tensor power of the algebra, n >= 1.
/// Every stored tuple has length == arity and a nonzero coefficient.
class TensorElement {
 public:
  using TermMap = std::map<TensorKey, LaurentPoly, TensorKeyLess>;

  explicit TensorElement(int arity);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coeff(const TensorKey& t) const;

  void add_term(const TensorKey& t, const LaurentPoly& c);
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  TensorElement operator-() const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement scaled(const LaurentPoly& c) const;

  bool operator==(const TensorElement&) const = default;

  std::string to_string() const;

 private:
  int arity_;
  TermMap terms_;
};

/// Componentwise degree of a tuple (degree operators count as (0,0)).
Degree tuple_degree(const TensorKey& t);

/// Tensor product of algebra elements (arity = number of factors).
TensorElement tensor_product(const std::vector<AlgebraElement>& factors);

/// Flip a (x) b -> b (x) a. Requires arity 2.
TensorElement twist(const TensorElement& t);

/// Rotation x1 (x) x2 (x) x3 -> x2 (x) x3 (x) x1. Requires arity 3.
TensorElement cyclic(const TensorElement& t);

/// Adjoint diagonal action, slotwise Leibniz rule:
///   x . (a1 (x) ... (x) an) = sum_i  a1 (x) ... [x, a_i] ... (x) an.
TensorElement diag_action(const AlgebraElement& x, const TensorElement& t);
TensorElement diag_action(const BasisElement& x, const TensorElement& t);

/// a (x) b - b (x) a; always lands in Im(1 - twist).
TensorElement wedge(const AlgebraElement& a, const AlgebraElement& b);

/// Membership in Im(1 - twist) via the kernel characterization:
/// t is in the image iff (1 + twist)(t) = 0. Requires arity 2.
bool in_im_one_minus_tau(const TensorElement& t);

/// Sub-sum of terms whose slot degrees sum to d.
TensorElement graded_component(const TensorElement& t, Degree d);

}  // namespace qlie

#endif
