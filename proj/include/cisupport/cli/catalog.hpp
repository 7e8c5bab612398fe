#pragma once

#include <string>
#include <vector>

#include "cisupport/realize/realize.hpp"

namespace cisupport {

/// Named test ring: one of the complete intersections used by the built-in
/// suites.
struct CatalogRing {
  std::string name;
  CIRing ci;
};

/// k[x,y]/(x^2,y^2)
CatalogRing ring_a2(std::uint32_t p);
/// k[x,y,z]/(x^2,y^2,z^2)
CatalogRing ring_a3(std::uint32_t p);
/// k[x,y,z]/(x^2,y^2)
CatalogRing ring_b(std::uint32_t p);
/// k[x,y,z]/(x^2)
CatalogRing ring_c(std::uint32_t p);

struct CatalogModule {
  std::string name;
  GradedModule module;
};

/// The chi form used for the catalog's mapping-cone module: chi1 chi2 - chi3^2
/// in codimension >= 3, chi1 - chi2 in codimension 2, chi1 in codimension 1.
Poly catalog_cone_form(const CIRing& ci);

/// Cones realized for the catalog (codimension >= 2): the coordinate line
/// chi_1 = .. = chi_{c-1} = 0 and the union of the hyperplanes chi1 chi2 = 0.
std::vector<std::vector<Poly>> catalog_cone_specs(const CIRing& ci);

/// k, R, R/(x), R/(y), syz1(k), K_p and the realized cones, in that order.
/// `realized` = false skips the realized cones.
std::vector<CatalogModule> catalog_modules(const CIRing& ci, bool realized = true);

}  // namespace cisupport
