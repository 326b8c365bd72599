#ifndef QLIE_RATIONAL_HPP
#define QLIE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qlie {

/// Exact rational scalar. GMP keeps values reduced with positive
/// denominator, which is the canonical form used everywhere.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0)
    throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q"; q must be nonzero.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qlie

#endif
