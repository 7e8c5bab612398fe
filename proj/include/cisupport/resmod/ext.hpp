#pragma once

#include "cisupport/resmod/resolution.hpp"

namespace cisupport {

/// True when N is isomorphic to a shift of the residue field.
bool is_residue_field(const GradedModule& N);

/// Ext^i_A(M, N) = 0, where A is the common ring of M and N.
///
/// For N = k this reads off the Betti number b_i. Otherwise Hom(-, N) is
/// applied to the minimal resolution of M and cycles are tested for
/// containment in boundaries at spot i.
bool ext_vanishes(const GradedModule& M, const GradedModule& N, int i);

/// Same test against an already computed resolution of M (length >= i+1).
bool ext_vanishes(const FreeResolution& F, const GradedModule& N, int i);

/// Matrix of Hom(d, N) : Hom(F_{n-1}, N) -> Hom(F_n, N) on the free covers
/// N^{b} (rows and columns ordered basis-major, N-generator-minor).
PolyMatrix hom_into(const PolyMatrix& d, const std::vector<int>& n_degrees);

/// Relations of Hom(F, N) = N^{b} for a free module F with basis degrees
/// `basis`: the block diagonal I (x) presentation(N).
PolyMatrix hom_relations(const std::vector<int>& basis, const PolyMatrix& n_presentation);

}  // namespace cisupport
