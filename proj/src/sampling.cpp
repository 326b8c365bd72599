#include "qlie/sampling.hpp"

namespace qlie {

long Sampler::pick(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational_coeff() {
  long num = pick(-3, 3);
  if (num == 0) num = 1;
  return rational(num, pick(1, 3));
}

LaurentPoly Sampler::laurent() {
  LaurentPoly p;
  const long n = pick(1, 3);
  for (long i = 0; i < n; ++i) p.add_term(pick(-2, 2), rational_coeff());
  if (p.is_zero()) p = LaurentPoly::constant(1);
  return p;
}

BasisElement Sampler::basis_element(int max_deg) {
  const auto window = basis_up_to(max_deg);
  return window[static_cast<std::size_t>(pick(0, static_cast<long>(window.size()) - 1))];
}

AlgebraElement Sampler::element(int max_deg, int nterms) {
  AlgebraElement x;
  const long n = pick(1, nterms);
  for (long i = 0; i < n; ++i) x.add_term(basis_element(max_deg), laurent());
  if (x.is_zero()) x = AlgebraElement(basis_element(max_deg));
  return x;
}

TensorElement Sampler::tensor2(int max_deg, int nterms) {
  TensorElement t(2);
  const long n = pick(1, nterms);
  for (long i = 0; i < n; ++i)
    t.add_term({basis_element(max_deg), basis_element(max_deg)}, laurent());
  return t;
}

TensorElement Sampler::skew_tensor(int max_deg, int nwedges) {
  TensorElement t(2);
  for (int i = 0; i < nwedges; ++i)
    t += wedge(element(max_deg), element(max_deg));
  return t;
}

TensorElement Sampler::symmetric_tensor(int max_deg, int nterms) {
  for (;;) {
    TensorElement raw = tensor2(max_deg, nterms);
    TensorElement sym = raw + twist(raw);
    if (!sym.is_zero()) return sym;
  }
}

}  // namespace qlie
