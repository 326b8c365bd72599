#ifndef QLIE_SAMPLING_HPP
#define QLIE_SAMPLING_HPP

#include <random>

#include "qlie/bialgebra.hpp"

namespace qlie {

/// Deterministic sampler for randomized trials. All draws go through the
/// raw mt19937_64 stream (no standard-library distributions), so a seed
/// reproduces the same values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  /// Uniform-ish integer in [lo, hi].
  long pick(long lo, long hi);

  /// Small nonzero rational with numerator in [-3,3] and denominator in
  /// {1,2,3}.
  Rational rational_coeff();

  /// 1-3 terms, exponents in [-2,2]; never zero.
  LaurentPoly laurent();

  BasisElement basis_element(int max_deg);

  /// 1-nterms random terms over the degree <= max_deg window.
  AlgebraElement element(int max_deg, int nterms = 2);

  /// Random arity-2 tensor over the window (no symmetry imposed).
  TensorElement tensor2(int max_deg, int nterms = 3);

  /// Random element of Im(1 - twist): a sum of wedges.
  TensorElement skew_tensor(int max_deg, int nwedges = 2);

  /// Random nonzero symmetric tensor: image of (1 + twist).
  TensorElement symmetric_tensor(int max_deg, int nterms = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qlie

#endif
