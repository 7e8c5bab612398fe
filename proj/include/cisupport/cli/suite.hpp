#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cisupport/cli/catalog.hpp"

namespace cisupport {

/// Outcome of one property over all of its cases.
struct PropertyResult {
  PropertyResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  /// One line per failing case (empty when everything passed).
  std::vector<std::string> failed;

  bool passed() const { return cases > 0 && failures == 0; }
  void record(bool ok, const std::string& what);
};

/// A catalog ring with its modules and their varieties computed once.
struct CatalogContext {
  CatalogRing ring;
  std::vector<CatalogModule> modules;
  std::vector<SupportVariety> varieties;

  const CIRing& ci() const { return ring.ci; }
  const PolyRing& chi() const { return *ring.ci.chi_ring(); }
};

CatalogContext make_context(CatalogRing ring, bool realized = true);

/// Membership oracle against vanishing of the annihilator ideal at every
/// point of k^c (zero included).
PropertyResult oracle_agreement(const CatalogContext& ctx);

PropertyResult residue_field_whole_space(const CatalogContext& ctx);
PropertyResult origin_iff_finite_projective_dimension(const CatalogContext& ctx);
PropertyResult pair_is_intersection(const CatalogContext& ctx, int max_modules);
PropertyResult pair_with_self_or_residue_field(const CatalogContext& ctx, int max_modules);
PropertyResult syzygy_invariance(const CatalogContext& ctx, int max_n = 3);
PropertyResult short_exact_sequence_inclusions(const CatalogContext& ctx);
PropertyResult dual_module(const CatalogContext& ctx, std::uint64_t seed = 1);
PropertyResult regular_element_quotient(const CatalogContext& ctx);
PropertyResult subspace_restriction(const CatalogContext& ctx, const std::vector<std::vector<std::vector<Coef>>>& subspaces);
PropertyResult equivalent_subspaces(const CatalogContext& ctx,
                                    const std::vector<std::pair<std::vector<std::vector<Coef>>, std::vector<std::vector<Coef>>>>& pairs);
PropertyResult mapping_cone_cut(const CatalogContext& ctx);
PropertyResult realized_cones(const CatalogContext& ctx, const std::vector<std::vector<Poly>>& specs);
PropertyResult tensor_over_base_instance(std::uint32_t p);
PropertyResult syzygy_ring_independence(const CatalogContext& ctx);
PropertyResult dimension_equals_complexity(const CatalogContext& ctx);
PropertyResult operator_identities(const CatalogContext& ctx, int window = 10);
PropertyResult finite_length_forms(const CatalogContext& ctx, std::uint64_t seed = 1);

/// Subspaces used for restriction checks in codimension 3: an axis plane, a
/// diagonal plane and a line.
std::vector<std::vector<std::vector<Coef>>> standard_subspaces(const Field& k);

/// Every property over the built-in catalog rings, in a fixed order.
/// `progress` (optional) is told the name of each property as it starts;
/// `seed` drives the regular-element searches.
std::vector<PropertyResult> run_check_suite(const std::function<void(const std::string&)>& progress = {},
                                            std::uint64_t seed = 1);

}  // namespace cisupport
