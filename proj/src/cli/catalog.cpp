#include "cisupport/cli/catalog.hpp"

#include "cisupport/exactalg/poly_text.hpp"

namespace cisupport {

namespace {

CatalogRing make(const std::string& name, std::uint32_t p, std::vector<std::string> vars,
                 const std::vector<std::string>& fs) {
  auto Q = std::make_shared<const PolyRing>(Field(p), std::move(vars));
  std::vector<Poly> polys;
  for (const auto& f : fs) polys.push_back(parse_poly(*Q, f));
  return {name + "/F" + std::to_string(p), CIRing(Q, polys)};
}

}  // namespace

CatalogRing ring_a2(std::uint32_t p) { return make("k[x,y]/(x^2,y^2)", p, {"x", "y"}, {"x^2", "y^2"}); }
CatalogRing ring_a3(std::uint32_t p) {
  return make("k[x,y,z]/(x^2,y^2,z^2)", p, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
}
CatalogRing ring_b(std::uint32_t p) { return make("k[x,y,z]/(x^2,y^2)", p, {"x", "y", "z"}, {"x^2", "y^2"}); }
CatalogRing ring_c(std::uint32_t p) { return make("k[x,y,z]/(x^2)", p, {"x", "y", "z"}, {"x^2"}); }

Poly catalog_cone_form(const CIRing& ci) {
  const PolyRing& X = *ci.chi_ring();
  if (ci.codim() >= 3) return parse_poly(X, "chi1*chi2 - chi3^2");
  if (ci.codim() == 2) return parse_poly(X, "chi1 - chi2");
  return X.var(0);
}

std::vector<std::vector<Poly>> catalog_cone_specs(const CIRing& ci) {
  const PolyRing& X = *ci.chi_ring();
  std::vector<std::vector<Poly>> out;
  if (ci.codim() < 2) return out;
  std::vector<Poly> line;
  for (int i = 0; i + 1 < ci.codim(); ++i) line.push_back(X.var(i));
  out.push_back(line);
  out.push_back({parse_poly(X, "chi1*chi2")});
  return out;
}

std::vector<CatalogModule> catalog_modules(const CIRing& ci, bool realized) {
  const auto& R = ci.ring();
  const PolyRing& Q = ci.poly();
  std::vector<CatalogModule> out;
  auto k = GradedModule::residue_field(R);
  out.push_back({"k", k});
  out.push_back({"R", GradedModule::free(R, {0})});
  out.push_back({"R/(" + Q.names()[0] + ")", GradedModule::cyclic(R, {Q.var(0)})});
  if (Q.nvars() > 1) out.push_back({"R/(" + Q.names()[1] + ")", GradedModule::cyclic(R, {Q.var(1)})});
  out.push_back({"syz1(k)", syzygy_module(k, 1)});
  Poly p = catalog_cone_form(ci);
  out.push_back({"K(" + format_poly(*ci.chi_ring(), p) + ")", mapping_cone_module(ci, k, p).module});
  if (realized)
    for (const auto& spec : catalog_cone_specs(ci)) {
      std::string name = "cone(";
      for (std::size_t i = 0; i < spec.size(); ++i) name += (i ? "," : "") + format_poly(*ci.chi_ring(), spec[i]);
      out.push_back({name + ")", realize_cone(ci, spec)});
    }
  return out;
}

}  // namespace cisupport
