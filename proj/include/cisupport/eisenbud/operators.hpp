#pragma once

#include <vector>

#include "cisupport/exactalg/ideal.hpp"
#include "cisupport/kernels/dense_modp.hpp"
#include "cisupport/resmod/resolution.hpp"

namespace cisupport {

/// Degree -2 operators t_i on a resolution F over R = Q/(f_1..f_c), solving
/// lift(d_{n-1}) lift(d_n) = sum_i f_i t_i[n] over Q.
///
/// t[i][n] is the matrix of t_i : F_n -> F_{n-2} for 2 <= n <= length
/// (entries for n < 2 are empty placeholders); scalar[i][n] is its
/// reduction modulo the irrelevant ideal.
struct OperatorFamily {
  std::vector<Poly> fs;
  int length = 0;
  std::vector<std::vector<PolyMatrix>> t;
  std::vector<std::vector<kernels::DenseMatrix>> scalar;
};

/// Entry-wise normal-form representatives over Q of the differentials.
std::vector<PolyMatrix> lift_to_ambient(const FreeResolution& F);

/// Solves the defining identity degree by degree (independent degrees run in
/// parallel). Throws std::logic_error when an entry of the square is not in
/// (fs), which means the lift is corrupted.
OperatorFamily operator_family(const PolyRing& Q, const std::vector<PolyMatrix>& lifted, const std::vector<Poly>& fs,
                               DivisorChoice divisor = DivisorChoice::First);

/// Checks lift(d_{n-1}) lift(d_n) == sum f_i t_i[n] exactly over Q.
bool satisfies_defining_identity(const PolyRing& Q, const std::vector<PolyMatrix>& lifted, const OperatorFamily& ops);

/// Checks d_{n-2} t_i[n] == t_i[n-1] d_n modulo the ring relations.
bool operators_are_chain_maps(const FreeResolution& F, const OperatorFamily& ops);

/// E = k (x)_R Ext_R(M, k) on degrees [0, window]: E^n = k^{b_n}, with
/// chi_i : E^n -> E^{n+2} the transpose of the scalar part of t_i[n+2].
struct ExtKModule {
  Field field;
  int codim = 0;
  int window = 0;
  std::vector<int> dims;
  /// action[i][n] : E^n -> E^{n+2} as a dims[n+2] x dims[n] matrix, n + 2 <= window.
  std::vector<std::vector<kernels::DenseMatrix>> action;

  /// Image of E^n under chi^alpha (alpha in exponent form), or nothing when
  /// the target leaves the window.
  kernels::DenseMatrix monomial_map(const std::vector<int>& alpha, int n) const;
  /// chi_i chi_j = chi_j chi_i on every E^n with n + 4 <= window.
  bool commutes() const;
};

ExtKModule ext_module(const FreeResolution& F, const OperatorFamily& ops);

/// Resolution of M over ci.ring() to `window`, operators and the induced
/// action on Ext(M, k).
ExtKModule chi_action(const CIRing& ci, const GradedModule& M, int window, DivisorChoice divisor = DivisorChoice::First);

/// Chain map P with P_n : F_n -> F_{n-2d} representing p(chi) for a
/// homogeneous p of chi-degree d, as sums of composites of the t_i reduced
/// modulo the ring. Components for n < 2d are empty. Requires
/// ops.length >= 2d. Degree 0 gives the identity.
std::vector<PolyMatrix> evaluate_chi_class(const CIRing& ci, const Poly& p, const FreeResolution& F,
                                           const OperatorFamily& ops);

}  // namespace cisupport
