#include "qlie/bialgebra.hpp"

#include <stdexcept>

namespace qlie {

RMatrix::RMatrix(TensorElement value) : value_(std::move(value)) {
  if (value_.arity() != 2)
    throw std::invalid_argument("r-matrix must have arity 2");
}

TensorElement cobracket(const RMatrix& r, const AlgebraElement& x) {
  return diag_action(x, r.value());
}

TensorElement cybe_c(const RMatrix& r) {
  TensorElement out(3);
  const auto& terms = r.value().terms();
  for (const auto& [ti, ci] : terms) {
    const BasisElement &ai = ti[0], &bi = ti[1];
    for (const auto& [tj, cj] : terms) {
      const BasisElement &aj = tj[0], &bj = tj[1];
      const LaurentPoly c = ci * cj;
      for (const auto& [x, cx] : basis_bracket(ai, aj).terms())
        out.add_term({x, bi, bj}, c * cx);
      for (const auto& [x, cx] : basis_bracket(bi, aj).terms())
        out.add_term({ai, x, bj}, c * cx);
      for (const auto& [x, cx] : basis_bracket(bi, bj).terms())
        out.add_term({ai, aj, x}, c * cx);
    }
  }
  return out;
}

TensorElement co_jacobi_defect(const RMatrix& r, const AlgebraElement& x) {
  const TensorElement d = cobracket(r, x);
  // (1 (x) D) applied slotwise to the second factor
  TensorElement cube(3);
  for (const auto& [key, c] : d.terms()) {
    const TensorElement inner = cobracket(r, AlgebraElement(key[1]));
    for (const auto& [ik, ic] : inner.terms())
      cube.add_term({key[0], ik[0], ik[1]}, c * ic);
  }
  return cube + cyclic(cube) + cyclic(cyclic(cube));
}

TensorElement coboundary_identity_defect(const RMatrix& r, const AlgebraElement& x) {
  return co_jacobi_defect(r, x) - diag_action(x, cybe_c(r));
}

TensorElement compatibility_defect(const RMatrix& r, const AlgebraElement& x,
                                   const AlgebraElement& y) {
  return cobracket(r, bracket(x, y)) - diag_action(x, cobracket(r, y)) +
         diag_action(y, cobracket(r, x));
}

bool mybe_check(const RMatrix& r, int max_deg) {
  const TensorElement c = cybe_c(r);
  for (const auto& b : basis_up_to(max_deg))
    if (!diag_action(b, c).is_zero()) return false;
  return true;
}

}  // namespace qlie
