#include "qlie/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qlie {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("exponent overflow");
  return out;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, std::int64_t exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, coeff);
  return p;
}

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Rational LaurentPoly::coeff(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exp, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(checked_add(ea, eb), ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [exp, v] : terms_) out.terms_.emplace(exp, v * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [exp, v] : terms_) out.terms_.emplace(checked_add(exp, k), v);
  return out;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (const auto& [exp, c] : terms_) {
    if (exp < 0 && q0 == 0)
      throw std::domain_error("eval at q=0 with negative exponent");
    Rational p(1);
    mpz_class num = q0.get_num(), den = q0.get_den();
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), e);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), e);
    if (exp < 0) std::swap(pn, pd);
    p = Rational(pn, pd);
    p.canonicalize();
    acc += c * p;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1);
    if (exp == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << "q";
      if (exp != 1) os << "^" << exp;
    }
  }
  return os.str();
}

namespace {

// Plain polynomial remainder in Q[q] on exponent-shifted inputs.
LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rational f = a.leading_coeff() / b.leading_coeff();
    a -= b.shifted(a.max_exp() - b.max_exp()).scaled(f);
  }
  return a;
}

// Strips the unit factor c*q^k: returns a monic polynomial with nonzero
// constant term.
LaurentPoly strip_units(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.min_exp()).scaled(1 / p.leading_coeff());
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = strip_units(a), y = strip_units(b);
  while (!y.is_zero()) {
    LaurentPoly r = poly_mod(x, y);
    x = y;
    y = strip_units(r);
  }
  return x;
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  LaurentPoly rem = a;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < b.max_exp() - b.min_exp())
      throw std::domain_error("laurent_div_exact: not divisible");
    Rational f = rem.leading_coeff() / b.leading_coeff();
    std::int64_t e = rem.max_exp() - b.max_exp();
    quot.add_term(e, f);
    rem -= b.shifted(e).scaled(f);
  }
  return quot;
}

}  // namespace qlie
