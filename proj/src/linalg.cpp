#include "qlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlie {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions");
}

void PolyMatrix::add(int r, int c, const LaurentPoly& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  if (v.is_zero()) return;
  auto& row = row_data_[r];
  auto [it, inserted] = row.emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

LaurentPoly PolyMatrix::entry(int r, int c) const {
  const auto& row = row_data_.at(r);
  auto it = row.find(c);
  return it == row.end() ? LaurentPoly{} : it->second;
}

std::vector<LaurentPoly> PolyMatrix::apply(const std::vector<LaurentPoly>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply: size mismatch");
  std::vector<LaurentPoly> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, p] : row_data_[r])
      if (!v[c].is_zero()) out[r] += p * v[c];
  return out;
}

namespace {

using SparseRow = std::map<int, LaurentPoly>;

// Divides the row by the gcd of its entries; cheap on monomial-heavy
// rows and the main defence against coefficient blowup.
void strip_content(SparseRow& row) {
  LaurentPoly g;
  for (const auto& [c, p] : row) {
    g = laurent_gcd(g, p);
    if (!g.is_zero() && g.max_exp() == 0) break;  // already a unit
  }
  if (g.is_zero() || g.max_exp() == 0) {
    // still normalize the scalar so rows stay small: divide by the
    // leading coefficient of the first entry
    if (!row.empty()) {
      const Rational lead = row.begin()->second.leading_coeff();
      if (lead != 1)
        for (auto& [c, p] : row) p = p.scaled(1 / lead);
    }
    return;
  }
  for (auto& [c, p] : row) p = laurent_div_exact(p, g);
}

struct Elimination {
  std::vector<SparseRow> pivot_rows;   // in pivot order
  std::vector<int> pivot_cols;         // parallel to pivot_rows
  int rank = 0;
};

// Column-ordered sparse elimination with fraction-free row updates
// (cross-multiplication followed by content stripping).
Elimination eliminate(const PolyMatrix& m) {
  std::vector<SparseRow> active;
  active.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) active.push_back(m.row(r));

  // rows currently having their leading entry at a given column
  std::vector<std::vector<std::size_t>> by_lead(m.cols());
  auto enqueue = [&](std::size_t idx) {
    if (!active[idx].empty()) by_lead[active[idx].begin()->first].push_back(idx);
  };
  for (std::size_t i = 0; i < active.size(); ++i) enqueue(i);

  Elimination out;
  for (int col = 0; col < m.cols(); ++col) {
    auto& bucket = by_lead[col];
    if (bucket.empty()) continue;
    // pivot: fewest monomials in the pivot entry, then sparsest row
    std::size_t best = bucket[0];
    for (std::size_t idx : bucket) {
      const auto& entry = active[idx].begin()->second;
      const auto& cur = active[best].begin()->second;
      auto key = std::pair{entry.term_count(), active[idx].size()};
      auto cur_key = std::pair{cur.term_count(), active[best].size()};
      if (key < cur_key) best = idx;
    }
    const SparseRow pivot = std::move(active[best]);
    const LaurentPoly& pv = pivot.begin()->second;
    for (std::size_t idx : bucket) {
      if (idx == best) continue;
      SparseRow& row = active[idx];
      const LaurentPoly f = row.begin()->second;
      // row <- pv * row - f * pivot
      SparseRow next;
      for (const auto& [c, p] : row) {
        LaurentPoly v = pv * p;
        if (!v.is_zero()) next.emplace(c, std::move(v));
      }
      for (const auto& [c, p] : pivot) {
        LaurentPoly v = f * p;
        if (v.is_zero()) continue;
        auto [it, inserted] = next.emplace(c, -v);
        if (!inserted) {
          it->second -= v;
          if (it->second.is_zero()) next.erase(it);
        }
      }
      next.erase(col);
      strip_content(next);
      row = std::move(next);
      enqueue(idx);
    }
    bucket.clear();
    out.pivot_rows.push_back(pivot);
    out.pivot_cols.push_back(col);
    ++out.rank;
  }
  return out;
}

void normalize_kernel_vector(std::vector<LaurentPoly>& v) {
  LaurentPoly g;
  for (const auto& p : v) {
    g = laurent_gcd(g, p);
    if (!g.is_zero() && g.max_exp() == 0) break;
  }
  if (!g.is_zero() && g.max_exp() > 0)
    for (auto& p : v) p = laurent_div_exact(p, g);
  // integer coefficients with content 1
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& p : v)
    for (const auto& [e, c] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& p : v) p = p.scaled(scale);
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    if (p.leading_coeff() < 0)
      for (auto& q : v) q = q.scaled(Rational(-1));
    break;
  }
}

}  // namespace

int rank(const PolyMatrix& m) { return eliminate(m).rank; }

int rank_eval(const PolyMatrix& m, const Rational& q0) {
  std::vector<std::map<int, Rational>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    std::map<int, Rational> row;
    for (const auto& [c, p] : m.row(r)) {
      Rational v = p.eval(q0);
      if (v != 0) row.emplace(c, std::move(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<std::vector<std::size_t>> by_lead(m.cols());
  auto enqueue = [&](std::size_t idx) {
    if (!rows[idx].empty()) by_lead[rows[idx].begin()->first].push_back(idx);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) enqueue(i);
  int rank = 0;
  for (int col = 0; col < m.cols(); ++col) {
    auto& bucket = by_lead[col];
    if (bucket.empty()) continue;
    std::size_t best = bucket[0];
    for (std::size_t idx : bucket)
      if (rows[idx].size() < rows[best].size()) best = idx;
    const auto pivot = std::move(rows[best]);
    const Rational pv = pivot.begin()->second;
    for (std::size_t idx : bucket) {
      if (idx == best) continue;
      auto& row = rows[idx];
      const Rational f = row.begin()->second / pv;
      for (const auto& [c, p] : pivot) {
        auto [it, inserted] = row.emplace(c, -f * p);
        if (!inserted) {
          it->second -= f * p;
          if (it->second == 0) row.erase(it);
        }
      }
      row.erase(col);
      enqueue(idx);
    }
    bucket.clear();
    ++rank;
  }
  return rank;
}

int rank_certified(const PolyMatrix& m, const Rational& q0) {
  const int bound = std::min(m.rows(), m.cols());
  const int fast = rank_eval(m, q0);
  if (fast == bound) return fast;  // lower bound meets upper bound
  return rank(m);
}

std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& m) {
  Elimination e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<LaurentPoly>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<RationalFunction> x(m.cols());
    x[free_col] = RationalFunction::constant(1);
    // pivot rows only contain their pivot column and later ones, so a
    // single bottom-up sweep solves the system
    for (int i = static_cast<int>(e.pivot_rows.size()) - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[i];
      const auto& row = e.pivot_rows[i];
      RationalFunction sum;
      for (const auto& [c, p] : row) {
        if (c == pc || x[c].is_zero()) continue;
        sum += RationalFunction(p) * x[c];
      }
      if (sum.is_zero()) { x[pc] = RationalFunction(); continue; }
      x[pc] = -sum / RationalFunction(row.at(pc));
    }
    // clear denominators
    LaurentPoly den_lcm = LaurentPoly::constant(1);
    for (const auto& xi : x) {
      if (xi.is_zero()) continue;
      LaurentPoly g = laurent_gcd(den_lcm, xi.den());
      den_lcm = laurent_div_exact(den_lcm * xi.den(), g);
    }
    std::vector<LaurentPoly> v(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      if (x[c].is_zero()) continue;
      v[c] = x[c].num() * laurent_div_exact(den_lcm, x[c].den());
    }
    normalize_kernel_vector(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational random_eval_point(std::mt19937_64& rng) {
  // small rationals, |q0| != 1, q0 != 0
  static const std::pair<long, long> pool[] = {
      {2, 1}, {3, 1}, {5, 1}, {-2, 1}, {-3, 1},
      {5, 2}, {7, 2}, {-5, 2}, {5, 3}, {7, 3}, {-7, 3}, {3, 2}};
  const auto& [n, d] = pool[rng() % std::size(pool)];
  return rational(n, d);
}

}  // namespace qlie
