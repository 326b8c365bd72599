#ifndef QLIE_RATIONAL_FUNCTION_HPP
#define QLIE_RATIONAL_FUNCTION_HPP

#include <string>

#include "qlie/laurent.hpp"

namespace qlie {

/// Element of Q(q), kept in canonical form: the denominator is a monic
/// polynomial with nonzero constant term (no q factor, since q is a unit
/// of the Laurent ring) and gcd(num, den) is a unit. Equality of
/// canonical forms is componentwise.
class RationalFunction {
 public:
  RationalFunction() : den_(LaurentPoly::constant(1)) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);
  explicit RationalFunction(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}

  static RationalFunction constant(long v) {
    return RationalFunction(LaurentPoly::constant(v));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }

  bool operator==(const RationalFunction& rhs) const = default;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Canonical representative of num/den; the constructor already
/// normalizes, so this is the identity on well-formed values.
RationalFunction rf_normal_form(const RationalFunction& x);

}  // namespace qlie

#endif
