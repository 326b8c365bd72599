#ifndef QLIE_BASIS_HPP
#define QLIE_BASIS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qlie {

/// Bidegree in the Z^2_{>=0} grading of the algebra.
struct Degree {
  int d1 = 0;
  int d2 = 0;

  int total() const { return d1 + d2; }
  bool is_zero() const { return d1 == 0 && d2 == 0; }
  friend Degree operator+(Degree a, Degree b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  bool operator==(const Degree&) const = default;
  /// Total degree first, then lexicographic. This is the canonical
  /// term order used for all serialization.
  std::strong_ordering operator<=>(const Degree& rhs) const {
    if (auto c = total() <=> rhs.total(); c != 0) return c;
    if (auto c = d1 <=> rhs.d1; c != 0) return c;
    return d2 <=> rhs.d2;
  }
};

/// Total order on integer tuples: compare coordinate sums first, then
/// lexicographically.
bool order_less(std::span<const std::int64_t> i, std::span<const std::int64_t> j);

enum class BasisKind : std::uint8_t { E = 0, F, G, H, D, D1, D2 };

const char* kind_name(BasisKind k);

/// One generator of the algebra: E/F/G/H at a bidegree, or one of the
/// three degree-zero operators D, D1, D2. G and H never occur at degree
/// (0,0); D, D1, D2 carry implicit degree (0,0).
class BasisElement {
 public:
  /// E_k, F_k, G_m, H_m.
  static BasisElement at(BasisKind kind, Degree deg);
  static BasisElement d() { return BasisElement(BasisKind::D, {}); }
  static BasisElement d1() { return BasisElement(BasisKind::D1, {}); }
  static BasisElement d2() { return BasisElement(BasisKind::D2, {}); }

  BasisKind kind() const { return kind_; }
  Degree degree() const { return deg_; }
  bool is_degree_operator() const {
    return kind_ == BasisKind::D || kind_ == BasisKind::D1 || kind_ == BasisKind::D2;
  }

  bool operator==(const BasisElement&) const = default;
  /// Degree-major order (total, then lexicographic), kinds E < F < G < H
  /// < D < D1 < D2 within a degree.
  std::strong_ordering operator<=>(const BasisElement& rhs) const {
    if (auto c = deg_ <=> rhs.deg_; c != 0) return c;
    return kind_ <=> rhs.kind_;
  }

  /// "E[1,0]", "D1", ...
  std::string to_string() const;

 private:
  BasisElement(BasisKind kind, Degree deg) : kind_(kind), deg_(deg) {}
  BasisKind kind_;
  Degree deg_;
};

/// Parses the CLI element syntax: "E:1,0", "G:1,1", "D", "D1", "D2".
BasisElement parse_basis_element(const std::string& text);

/// All basis elements of total degree <= n, in canonical order.
/// Degree (0,0) contributes E, F, D, D1, D2; every other degree
/// contributes E, F, G, H.
std::vector<BasisElement> basis_up_to(int n);

/// The four (or five) basis elements spanning the graded component at d.
std::vector<BasisElement> basis_at(Degree d);

enum class TriangularPart { Minus, Cartan, Plus };

/// F -> minus, E -> plus, everything else -> cartan.
TriangularPart triangular_component(const BasisElement& b);

/// Basis of the maximal commutative subalgebra, truncated at total
/// degree n: D, D1 and G_{0,m}, H_{0,m} for 1 <= m <= n.
std::vector<BasisElement> max_commutative_basis(int n);

}  // namespace qlie

#endif
