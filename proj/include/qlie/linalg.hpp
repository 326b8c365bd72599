#ifndef QLIE_LINALG_HPP
#define QLIE_LINALG_HPP

#include <map>
#include <random>
#include <vector>

#include "qlie/laurent.hpp"
#include "qlie/rational_function.hpp"

namespace qlie {

/// Sparse matrix with Laurent polynomial entries, the carrier for every
/// truncated linear system.
class PolyMatrix {
 public:
  using Row = std::map<int, LaurentPoly>;

  PolyMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Row& row(int r) const { return row_data_[r]; }

  /// Accumulates v into entry (r, c).
  void add(int r, int c, const LaurentPoly& v);
  LaurentPoly entry(int r, int c) const;

  /// Exact sparse product against a dense column vector.
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const;

 private:
  int rows_, cols_;
  std::vector<Row> row_data_;
};

/// Exact rank over Q(q) by fraction-free elimination. Pivots prefer
/// entries with the fewest monomials, then the sparsest row, which keeps
/// coefficient growth down on these mostly-monomial systems.
int rank(const PolyMatrix& m);

/// Rank of the evaluated matrix at q = q0, over Q. Always a lower bound
/// for the exact rank (a nonzero minor at q0 is nonzero symbolically),
/// so hitting min(rows, cols) certifies the exact value.
int rank_eval(const PolyMatrix& m, const Rational& q0);

/// Certified rank with a randomized pre-screen: if the evaluation rank
/// reaches min(rows, cols) the bound argument makes it exact; otherwise
/// falls back to fraction-free elimination.
int rank_certified(const PolyMatrix& m, const Rational& q0);

/// Basis of the right null space over Q(q). Vectors are cleared to
/// Laurent polynomial entries: common polynomial factor removed, integer
/// coefficients with content 1, first nonzero entry with positive
/// leading coefficient.
std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& m);

/// Small rational evaluation point away from 0 and the unit circle.
Rational random_eval_point(std::mt19937_64& rng);

}  // namespace qlie

#endif
