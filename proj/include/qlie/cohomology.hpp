#ifndef QLIE_COHOMOLOGY_HPP
#define QLIE_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "qlie/bialgebra.hpp"
#include "qlie/linalg.hpp"
#include "qlie/tensor.hpp"

namespace qlie {

/// Degree offset of a homogeneous map; unlike basis degrees these may be
/// negative componentwise (components of the coefficient module at a
/// negative degree are empty, so such windows are vacuous).
struct DegreeOffset {
  int d1 = 0;
  int d2 = 0;
  bool is_zero() const { return d1 == 0 && d2 == 0; }
  bool operator==(const DegreeOffset&) const = default;
};

/// A homogeneous map from the truncated algebra into the tensor square,
/// stored by its values on window basis elements. The value on b lies in
/// the graded component deg(b) + offset.
struct TruncatedDerivation {
  DegreeOffset offset;
  std::map<BasisElement, TensorElement> values;

  TensorElement value(const BasisElement& b) const;
};

/// All arity-2 basis tuples whose componentwise degree sum equals d;
/// empty when d has a negative component.
std::vector<TensorKey> component_tuples(int d1, int d2);

/// The inner derivation x -> x . v restricted to total degree <= max_deg.
/// v must be homogeneous of degree = offset.
TruncatedDerivation inner_derivation(const TensorElement& v, DegreeOffset offset,
                                     int max_deg);

/// Spanning set of inner derivations at the given offset: one generator
/// per basis tuple of the tensor square at that graded component.
std::vector<TruncatedDerivation> inner_space(DegreeOffset offset, int max_deg);

/// Witness for an inner derivation of nonzero offset: picks rho = D1 if
/// offset.d1 != 0 else D2, and returns v = d(rho) / rho(offset). When d
/// satisfies the derivation equations within the window, x -> x . v
/// agrees with d on every window element.
TensorElement inner_witness(const TruncatedDerivation& d, DegreeOffset offset);

/// The invariant tensor E00 (x) F00 + F00 (x) E00 + 1/2 D (x) D,
/// annihilated by the degree-zero sl2 triple {E00, F00, D}.
TensorElement casimir_tensor();

// ---- joint kernel of the distinguished annihilator set ----

struct JointKernelOptions {
  /// Certify dimension 0 through evaluation rank when possible; fall
  /// back to exact elimination otherwise.
  bool fast_path = false;
  Rational eval_point = Rational(5) / 3;
  /// Extend the annihilator set {E00,F00,D,D1,D2,E10,F10} with E01 and
  /// F01, whose degrees have a nonzero second component.
  bool extended_generators = false;
};

struct JointKernelResult {
  int dimension = 0;
  std::vector<TensorElement> basis;
  /// True when the result came from exact elimination (a full-rank
  /// evaluation certificate is also exact, and is flagged here).
  bool certified = true;
};

/// Kernel of the stacked action matrix of the annihilator set on the
/// n-fold tensor power of the degree <= N window; the codomain extends
/// automatically one degree level, so the system is exact.
JointKernelResult joint_kernel(int power, int max_deg,
                               const JointKernelOptions& opts = {});

// ---- homogeneous derivation systems ----

struct DerivationSystem {
  DegreeOffset offset;
  int max_deg = 0;
  std::vector<BasisElement> window;
  /// Column index: unknown coefficient of tuple t in the value on b.
  std::vector<std::pair<BasisElement, TensorKey>> columns;
  PolyMatrix matrix;

  int column_of(const BasisElement& b, const TensorKey& t) const;
  /// Coordinates of a truncated derivation in this column order.
  std::vector<LaurentPoly> coordinates(const TruncatedDerivation& d) const;

  DerivationSystem() : matrix(0, 0) {}
};

/// Assembles the linear system for homogeneous derivations of the given
/// offset on the degree <= N window. One equation block per basis pair
/// whose bracket has support inside the window (a vanishing bracket
/// always qualifies); pairs whose bracket leaves the window are skipped
/// entirely rather than projected.
DerivationSystem build_derivation_system(DegreeOffset offset, int max_deg);

/// The spec'd matrix view of the system above.
PolyMatrix derivation_system(DegreeOffset offset, int max_deg);

struct H1Options {
  bool fast_path = false;
  std::vector<Rational> eval_points = {Rational(5) / 3, Rational(7) / 2};
};

/// dim(solutions of the derivation system) - dim(span of the inner
/// derivations), both inside the truncation window. A truncated
/// necessary check: the untruncated statement is not claimed.
int h1_dimension(DegreeOffset offset, int max_deg, const H1Options& opts = {});

}  // namespace qlie

#endif
