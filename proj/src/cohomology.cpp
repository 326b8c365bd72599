#include "qlie/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlie {

TensorElement TruncatedDerivation::value(const BasisElement& b) const {
  auto it = values.find(b);
  return it == values.end() ? TensorElement(2) : it->second;
}

std::vector<TensorKey> component_tuples(int d1, int d2) {
  std::vector<TensorKey> out;
  if (d1 < 0 || d2 < 0) return out;
  for (int a1 = 0; a1 <= d1; ++a1)
    for (int a2 = 0; a2 <= d2; ++a2)
      for (const auto& b1 : basis_at({a1, a2}))
        for (const auto& b2 : basis_at({d1 - a1, d2 - a2}))
          out.push_back({b1, b2});
  std::sort(out.begin(), out.end(), TensorKeyLess{});
  return out;
}

TruncatedDerivation inner_derivation(const TensorElement& v, DegreeOffset offset,
                                     int max_deg) {
  TruncatedDerivation d;
  d.offset = offset;
  for (const auto& b : basis_up_to(max_deg)) {
    TensorElement img = diag_action(b, v);
    if (!img.is_zero()) d.values.emplace(b, std::move(img));
  }
  return d;
}

std::vector<TruncatedDerivation> inner_space(DegreeOffset offset, int max_deg) {
  std::vector<TruncatedDerivation> out;
  for (const auto& t : component_tuples(offset.d1, offset.d2)) {
    TensorElement v(2);
    v.add_term(t, LaurentPoly::constant(1));
    out.push_back(inner_derivation(v, offset, max_deg));
  }
  return out;
}

TensorElement inner_witness(const TruncatedDerivation& d, DegreeOffset offset) {
  if (offset.is_zero())
    throw std::invalid_argument("inner_witness requires a nonzero offset");
  const bool use_d1 = offset.d1 != 0;
  const BasisElement rho = use_d1 ? BasisElement::d1() : BasisElement::d2();
  const int eig = use_d1 ? offset.d1 : offset.d2;
  return d.value(rho).scaled(LaurentPoly::monomial(rational(1, eig)));
}

TensorElement casimir_tensor() {
  const AlgebraElement e{BasisElement::at(BasisKind::E, {})};
  const AlgebraElement f{BasisElement::at(BasisKind::F, {})};
  const AlgebraElement dd{BasisElement::d()};
  TensorElement out = tensor_product({e, f});
  out += tensor_product({f, e});
  out += tensor_product({dd, dd}).scaled(LaurentPoly::monomial(rational(1, 2)));
  return out;
}

namespace {

std::vector<BasisElement> annihilator_set(bool extended) {
  std::vector<BasisElement> ops{
      BasisElement::at(BasisKind::E, {}), BasisElement::at(BasisKind::F, {}),
      BasisElement::d(), BasisElement::d1(), BasisElement::d2(),
      BasisElement::at(BasisKind::E, {1, 0}), BasisElement::at(BasisKind::F, {1, 0})};
  if (extended) {
    ops.push_back(BasisElement::at(BasisKind::E, {0, 1}));
    ops.push_back(BasisElement::at(BasisKind::F, {0, 1}));
  }
  return ops;
}

}  // namespace

JointKernelResult joint_kernel(int power, int max_deg, const JointKernelOptions& opts) {
  if (power != 2 && power != 3)
    throw std::invalid_argument("joint_kernel: power must be 2 or 3");
  if (max_deg < 1) throw std::invalid_argument("joint_kernel: max_deg must be >= 1");

  const std::vector<BasisElement> window = basis_up_to(max_deg);
  const int wn = static_cast<int>(window.size());

  // domain columns: all power-fold tuples over the window
  std::vector<TensorKey> domain;
  {
    std::vector<int> idx(power, 0);
    for (;;) {
      TensorKey t;
      t.reserve(power);
      for (int i : idx) t.push_back(window[i]);
      domain.push_back(std::move(t));
      int p = power - 1;
      while (p >= 0 && ++idx[p] == wn) idx[p--] = 0;
      if (p < 0) break;
    }
  }
  const int ncols = static_cast<int>(domain.size());

  const auto ops = annihilator_set(opts.extended_generators);
  // row ids keyed by (operator, image tuple)
  std::map<std::pair<int, TensorKey>, int,
           decltype([](const auto& a, const auto& b) {
             if (a.first != b.first) return a.first < b.first;
             return TensorKeyLess{}(a.second, b.second);
           })>
      row_of;
  std::vector<std::tuple<int, int, LaurentPoly>> entries;
  for (int col = 0; col < ncols; ++col) {
    TensorElement t(power);
    t.add_term(domain[col], LaurentPoly::constant(1));
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
      const TensorElement img = diag_action(ops[oi], t);
      for (const auto& [key, c] : img.terms()) {
        auto [it, inserted] =
            row_of.emplace(std::pair{static_cast<int>(oi), key}, static_cast<int>(row_of.size()));
        entries.emplace_back(it->second, col, c);
      }
    }
  }
  PolyMatrix m(static_cast<int>(row_of.size()), ncols);
  for (const auto& [r, c, v] : entries) m.add(r, c, v);

  JointKernelResult out;
  if (opts.fast_path) {
    const int fast = rank_eval(m, opts.eval_point);
    if (fast == ncols) {
      // full column rank at one point certifies a trivial kernel
      out.dimension = 0;
      out.certified = true;
      return out;
    }
  }
  const auto kernel = kernel_basis(m);
  out.dimension = static_cast<int>(kernel.size());
  out.certified = true;
  for (const auto& vec : kernel) {
    TensorElement t(power);
    for (int c = 0; c < ncols; ++c)
      if (!vec[c].is_zero()) t.add_term(domain[c], vec[c]);
    out.basis.push_back(std::move(t));
  }
  return out;
}

int DerivationSystem::column_of(const BasisElement& b, const TensorKey& t) const {
  // columns are grouped by window element, tuples in canonical order
  auto lo = std::lower_bound(
      columns.begin(), columns.end(), std::pair{b, t},
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return TensorKeyLess{}(x.second, y.second);
      });
  if (lo == columns.end() || lo->first != b || lo->second != t)
    throw std::out_of_range("derivation system: unknown column");
  return static_cast<int>(lo - columns.begin());
}

std::vector<LaurentPoly> DerivationSystem::coordinates(const TruncatedDerivation& d) const {
  std::vector<LaurentPoly> out(columns.size());
  for (const auto& [b, tensor] : d.values)
    for (const auto& [t, c] : tensor.terms()) out[column_of(b, t)] = c;
  return out;
}

DerivationSystem build_derivation_system(DegreeOffset offset, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("derivation system: max_deg must be >= 1");
  DerivationSystem sys;
  sys.offset = offset;
  sys.max_deg = max_deg;
  sys.window = basis_up_to(max_deg);

  for (const auto& b : sys.window)
    for (const auto& t :
         component_tuples(b.degree().d1 + offset.d1, b.degree().d2 + offset.d2))
      sys.columns.emplace_back(b, t);
  const int ncols = static_cast<int>(sys.columns.size());

  const auto in_window = [&](const BasisElement& b) {
    return b.degree().total() <= max_deg;
  };

  // equations: d([b,b2]) = b . d(b2) - b2 . d(b) per admissible pair
  std::vector<std::tuple<int, int, LaurentPoly>> entries;
  int nrows = 0;
  for (std::size_t i = 0; i < sys.window.size(); ++i) {
    const BasisElement& b = sys.window[i];
    for (std::size_t j = i + 1; j < sys.window.size(); ++j) {
      const BasisElement& b2 = sys.window[j];
      const AlgebraElement br = basis_bracket(b, b2);
      bool ok = true;
      for (const auto& [b3, c] : br.terms())
        if (!in_window(b3)) { ok = false; break; }
      if (!ok) continue;

      std::map<TensorKey, int, TensorKeyLess> block_rows;
      auto row_id = [&](const TensorKey& t) {
        auto [it, inserted] = block_rows.emplace(t, nrows);
        if (inserted) ++nrows;
        return it->second;
      };
      // b . d(b2)
      for (const auto& t : component_tuples(b2.degree().d1 + offset.d1,
                                            b2.degree().d2 + offset.d2)) {
        TensorElement unit(2);
        unit.add_term(t, LaurentPoly::constant(1));
        const int col = sys.column_of(b2, t);
        for (const auto& [u, c] : diag_action(b, unit).terms())
          entries.emplace_back(row_id(u), col, c);
      }
      // - b2 . d(b)
      for (const auto& t : component_tuples(b.degree().d1 + offset.d1,
                                            b.degree().d2 + offset.d2)) {
        TensorElement unit(2);
        unit.add_term(t, LaurentPoly::constant(1));
        const int col = sys.column_of(b, t);
        for (const auto& [u, c] : diag_action(b2, unit).terms())
          entries.emplace_back(row_id(u), col, -c);
      }
      // - d([b,b2])
      for (const auto& [b3, c] : br.terms())
        for (const auto& t : component_tuples(b3.degree().d1 + offset.d1,
                                              b3.degree().d2 + offset.d2))
          entries.emplace_back(row_id(t), sys.column_of(b3, t), -c);
    }
  }

  sys.matrix = PolyMatrix(nrows, ncols);
  for (const auto& [r, c, v] : entries) sys.matrix.add(r, c, v);
  return sys;
}

PolyMatrix derivation_system(DegreeOffset offset, int max_deg) {
  return build_derivation_system(offset, max_deg).matrix;
}

int h1_dimension(DegreeOffset offset, int max_deg, const H1Options& opts) {
  const DerivationSystem sys = build_derivation_system(offset, max_deg);
  const int ncols = sys.matrix.cols();
  if (ncols == 0) return 0;  // vacuous window

  const auto inner = inner_space(offset, max_deg);
  PolyMatrix inner_matrix(static_cast<int>(inner.size()), ncols);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const auto coords = sys.coordinates(inner[i]);
    for (int c = 0; c < ncols; ++c)
      if (!coords[c].is_zero()) inner_matrix.add(static_cast<int>(i), c, coords[c]);
  }

  if (opts.fast_path) {
    // Sandwich certificate. Inner derivations satisfy the system exactly
    // (checked below), so dim_inner <= dim_solutions. Evaluation ranks
    // bound both sides:
    //   dim_solutions <= cols - rank_eval(system)
    //   dim_inner     >= rank_eval(inner)
    // Equality of the two bounds pins the quotient at zero.
    bool inner_ok = true;
    for (std::size_t i = 0; i < inner.size() && inner_ok; ++i) {
      const auto coords = sys.coordinates(inner[i]);
      for (const auto& p : sys.matrix.apply(coords))
        if (!p.is_zero()) { inner_ok = false; break; }
    }
    if (inner_ok) {
      for (const auto& q0 : opts.eval_points) {
        const int rs = rank_eval(sys.matrix, q0);
        const int ri = rank_eval(inner_matrix, q0);
        if (ncols - rs == ri) return 0;
      }
    }
  }
  const int rank_sys = rank(sys.matrix);
  const int rank_inner = rank(inner_matrix);
  return (ncols - rank_sys) - rank_inner;
}

}  // namespace qlie
