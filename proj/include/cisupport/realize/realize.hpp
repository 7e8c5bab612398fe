#pragma once

#include <cstdint>
#include <vector>

#include "cisupport/resmod/constructions.hpp"
#include "cisupport/variety/variety.hpp"

namespace cisupport {

/// Augmented mapping cone of the chain map representing p(chi).
struct MappingCone {
  /// Block matrix [[-d_e, 0], [P_e, d_1]] : F_e + F_1 -> F_{e-1} + F_0,
  /// with the F_0 block twisted by the internal degree of p.
  PolyMatrix raw;
  /// coker(raw), pruned to a minimal presentation.
  GradedModule module;
  /// The two ends of 0 -> M -> K_p -> Omega^{e-1} M -> 0 (M twisted).
  GradedModule sub;
  GradedModule quotient;
  int cohomological_degree = 0;
  int internal_shift = 0;
  /// Hilbert functions add up over the checked degree range.
  bool sequence_exact = false;
  /// P_e as computed (entries over R).
  PolyMatrix chain_component;
};

/// K_p for a homogeneous p in k[chi] of degree d >= 1, with e = 2d.
MappingCone mapping_cone_module(const CIRing& ci, const GradedModule& M, const Poly& p);

/// Starting from k, applies one mapping cone per generator; the result's
/// variety is the zero set of the generators.
GradedModule realize_cone(const CIRing& ci, const std::vector<Poly>& polys);

struct FiniteLengthForm {
  GradedModule module;
  /// Syzygy index t with Omega^t(M) maximal Cohen-Macaulay (as witnessed by
  /// the regular sequence found).
  int syzygy = 0;
  std::vector<Poly> regular_sequence;
  /// The result has Krull dimension zero; false marks a partial result.
  bool complete = false;
};

/// Omega^t(M) for the smallest t admitting a regular sequence of length
/// dim R found by search, modulo that sequence.
FiniteLengthForm finite_length_form(const CIRing& ci, const GradedModule& M, std::uint64_t seed = 1);

/// Hilbert function comparison window used by the sequence checks.
std::pair<int, int> hilbert_window(const GradedModule& M, int extra = 8);

}  // namespace cisupport
