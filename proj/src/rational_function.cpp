#include "qlie/rational_function.hpp"

#include <stdexcept>

namespace qlie {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  LaurentPoly g = laurent_gcd(num_, den_);
  if (g.max_exp() > 0) {  // nontrivial common factor
    num_ = laurent_div_exact(num_, g);
    den_ = laurent_div_exact(den_, g);
  }
  // move the denominator's unit factor c*q^k into the numerator
  const std::int64_t k = den_.min_exp();
  const Rational lead = den_.leading_coeff();
  den_ = den_.shifted(-k).scaled(1 / lead);
  num_ = num_.shifted(-k).scaled(1 / lead);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_normal_form(const RationalFunction& x) {
  return RationalFunction(x.num(), x.den());
}

}  // namespace qlie
