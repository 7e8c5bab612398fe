#pragma once

#include <vector>

#include "cisupport/exactalg/poly_matrix.hpp"
#include "cisupport/resmod/ring.hpp"

namespace cisupport {

/// Finitely generated graded module over A = Q/J, the cokernel of its
/// presentation matrix (rows = generators with their degrees, columns =
/// relations). Entries are kept as normal forms modulo J.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(QuotientRingPtr A, PolyMatrix presentation);

  static GradedModule free(QuotientRingPtr A, std::vector<int> degrees);
  static GradedModule zero(QuotientRingPtr A);
  /// A / (gens), generated in degree `shift`.
  static GradedModule cyclic(QuotientRingPtr A, const std::vector<Poly>& gens, int shift = 0);
  static GradedModule residue_field(QuotientRingPtr A);

  const QuotientRing& ring() const { return *A_; }
  const QuotientRingPtr& ring_ptr() const { return A_; }
  const PolyMatrix& presentation() const { return pres_; }
  int num_generators() const { return pres_.rows(); }
  int num_relations() const { return pres_.cols(); }
  const std::vector<int>& degrees() const { return pres_.row_degrees(); }

  /// Removes unit entries (generator/relation pairs) until none remain,
  /// drops zero relations, then keeps a minimal set of relations. The
  /// result is a minimal presentation of the same module.
  GradedModule minimize() const;
  bool is_minimal() const;

  /// Same presentation read over another quotient of Q (entries reduced).
  /// Used for change of rings A -> A/(more) and for extension of scalars.
  GradedModule over(QuotientRingPtr B) const;

  /// View a module over B = A'/(extra) as a module over A' (restriction of
  /// scalars along A' -> B): appends the multiples g*e_i for B's relations.
  GradedModule restrict_to(QuotientRingPtr A) const;

  /// Hilbert function values dim_k M_t for t in [from, to].
  std::vector<long long> hilbert_function(int from, int to) const;
  /// Krull dimension of the module (-1 for the zero module).
  int krull_dim() const;
  bool is_zero() const;
  /// Total k-dimension; requires krull_dim() <= 0.
  long long length() const;

  /// Degree range [lo, hi] outside which M_t = 0 (finite length only).
  std::pair<int, int> degree_span() const;

 private:
  QuotientRingPtr A_;
  PolyMatrix pres_;
};

/// Minimal presentation from a raw one: prune + minimize.
GradedModule prune(const GradedModule& M);

/// Presentation whose only generators are degree-homogeneous and whose
/// entries are normal forms; throws std::invalid_argument otherwise.
void require_homogeneous(const GradedModule& M);

}  // namespace cisupport
