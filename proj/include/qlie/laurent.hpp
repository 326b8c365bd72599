#ifndef QLIE_LAURENT_HPP
#define QLIE_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qlie/rational.hpp"

namespace qlie {

/// Element of Q[q, q^-1]: a finite sum of rational multiples of integer
/// powers of the formal parameter q. The term map never stores zero
/// coefficients, so structural equality is semantic equality.
///
/// q is transcendental here; a Laurent polynomial is zero iff it is
/// identically zero. Numeric evaluation at a rational point exists only
/// as a fast consistency path.
class LaurentPoly {
 public:
  using TermMap = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Rational& coeff, std::int64_t exp = 0);
  static LaurentPoly constant(long value) { return monomial(Rational(value)); }
  /// The monomial q^k.
  static LaurentPoly q_power(std::int64_t k) { return monomial(Rational(1), k); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Smallest/largest exponent; requires a nonzero polynomial.
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  const Rational& leading_coeff() const;
  /// Coefficient of q^k (zero if absent).
  Rational coeff(std::int64_t k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;
  /// Multiplication by q^k.
  LaurentPoly shifted(std::int64_t k) const;

  bool operator==(const LaurentPoly& rhs) const = default;

  /// Exact evaluation at q = q0. q0 must be nonzero when negative
  /// exponents are present.
  Rational eval(const Rational& q0) const;

  void add_term(std::int64_t exp, const Rational& coeff);

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Monic gcd in Q[q, q^-1], determined up to units c*q^k; the result is
/// normalized to a monic polynomial with nonzero constant term. gcd of
/// two zeros is zero.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Checked exponent addition (degrees stay tiny at this scale, but the
/// arithmetic is guarded anyway).
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace qlie

#endif
