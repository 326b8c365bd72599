#ifndef QLIE_ALGEBRA_HPP
#define QLIE_ALGEBRA_HPP

#include <map>
#include <string>

#include "qlie/basis.hpp"
#include "qlie/laurent.hpp"

namespace qlie {

/// Finite Q[q,q^-1]-linear combination of basis elements, kept sparse
/// and canonical (no zero coefficients, terms in canonical order).
class AlgebraElement {
 public:
  using TermMap = std::map<BasisElement, LaurentPoly>;

  AlgebraElement() = default;
  /// Single term c*b.
  AlgebraElement(const BasisElement& b, LaurentPoly c);
  explicit AlgebraElement(const BasisElement& b)
      : AlgebraElement(b, LaurentPoly::constant(1)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coeff(const BasisElement& b) const;

  void add_term(const BasisElement& b, const LaurentPoly& c);
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement scaled(const LaurentPoly& c) const;

  bool operator==(const AlgebraElement&) const = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Bracket of two basis elements, per the structure-constant table:
///
///   [E,E] = [F,F] = 0,            [G_m,H_n] = 0
///   [D,E_k] = 2E_k,  [D,F_k] = -2F_k,  [D,G] = [D,H] = 0
///   [G_m,F_k] = -q^{m1 k2} F_{m+k}    [H_m,F_k] =  q^{m2 k1} F_{m+k}
///   [G_m,E_k] =  q^{m2 k1} E_{m+k}    [H_m,E_k] = -q^{m1 k2} E_{m+k}
///   [G_m,G_n] = [H_m,H_n] with coefficient (q^{m2 n1} - q^{n2 m1})
///   [E_k,F_l] = q^{k2 l1} G_{k+l} - q^{l2 k1} H_{k+l}   (k+l != 0)
///             = q^{k2 l1} D                             (k+l == 0)
///   [D_i, x]  = k_i x  on the degree-(k1,k2) component, 0 on D, D1, D2
///
/// Reversed-order pairs are derived by antisymmetry; the table stores a
/// single orientation.
AlgebraElement basis_bracket(const BasisElement& a, const BasisElement& b);

/// Bilinear extension of basis_bracket.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace qlie

#endif
