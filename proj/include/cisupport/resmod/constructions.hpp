#pragma once

#include <optional>

#include "cisupport/resmod/resolution.hpp"

namespace cisupport {

/// M1 (x)_Q M2 for modules presented over the same polynomial ring, pushed to
/// `target` (a quotient of that ring). Generators are pairs (i1, i2) in
/// i1-major order; relations are (P1 (x) id | id (x) P2).
GradedModule tensor_over_base(const GradedModule& M1, const GradedModule& M2, QuotientRingPtr target);

struct ElementQuotient {
  GradedModule module;
  /// Multiplication by x is injective on M.
  bool regular = false;
};

/// M / xM together with whether x is M-regular.
ElementQuotient quotient_by_element(const GradedModule& M, const Poly& x);

/// Kernel of multiplication by x on M, as columns over the generators of M.
PolyMatrix multiplication_kernel(const GradedModule& M, const Poly& x);

struct SubmoduleSequence {
  GradedModule sub;
  GradedModule quotient;
  /// Columns of the inclusion sub -> M on M's generators.
  PolyMatrix inclusion;
};

/// S = submodule of M generated by the columns of `elements` (rows = M's
/// generators, column degrees = element degrees) and M/S.
SubmoduleSequence submodule_and_quotient(const GradedModule& M, const PolyMatrix& elements);

/// ker(b) / im(a) for composable maps a : F -> G, b : G -> H with b a = 0
/// over A. An empty `a` (no columns) gives ker(b); pass b with zero rows for
/// coker(a).
GradedModule homology_module(QuotientRingPtr A, const PolyMatrix& a, const PolyMatrix& b);

/// Ext^m_A(M, A) via the dual of the minimal resolution.
GradedModule dual_ext(const GradedModule& M, int m);

/// Hilbert function of M in degrees [from, to] plus the additivity check
/// HS(S) + HS(M/S) = HS(M) over that range.
bool hilbert_additive(const GradedModule& S, const GradedModule& M, const GradedModule& Q, int from, int to);

}  // namespace cisupport
