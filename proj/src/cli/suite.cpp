#include "cisupport/cli/suite.hpp"

#include <mutex>

#include "cisupport/exactalg/poly_text.hpp"
#include "cisupport/kernels/parallel.hpp"
#include "cisupport/resmod/ext.hpp"

namespace cisupport {

void PropertyResult::record(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    ++failures;
    failed.push_back(what);
  }
}

namespace {

std::string label(const CatalogContext& ctx, const std::string& module) { return ctx.ring.name + " " + module; }

std::string point_text(const std::vector<Coef>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// Runs body(i) for i < n in parallel and records the outcomes in index order.
void record_all(PropertyResult& r, int n, const std::function<std::pair<bool, std::string>(int)>& body) {
  auto out = kernels::parallel_map<std::pair<bool, std::string>>(n, body);
  for (const auto& [ok, what] : out) r.record(ok, what);
}

bool same_variety(const PolyRing& chi, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return equal_up_to_radical(chi, a, b);
}

// Solves row = x A for x (A has full row rank).
std::vector<Coef> solve_row(const Field& k, const std::vector<std::vector<Coef>>& A, const std::vector<Coef>& row) {
  const int r = static_cast<int>(A.size()), c = static_cast<int>(row.size());
  kernels::DenseMatrix m(c, r + 1);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < r; ++j) m.at(i, j) = A[j][i];
    m.at(i, r) = k.neg(row[i]);
  }
  kernels::DenseMatrix ns = kernels::nullspace(k, m);
  for (int t = 0; t < ns.rows; ++t)
    if (ns.at(t, r) != 0) {
      Coef inv = k.inv(ns.at(t, r));
      std::vector<Coef> x;
      for (int j = 0; j < r; ++j) x.push_back(k.mul(ns.at(t, j), inv));
      return x;
    }
  throw std::invalid_argument("row is not in the span of the subspace matrix");
}

}  // namespace

CatalogContext make_context(CatalogRing ring, bool realized) {
  CatalogContext ctx{std::move(ring), {}, {}};
  ctx.modules = catalog_modules(ctx.ci(), realized);
  for (const auto& m : ctx.modules) ctx.varieties.push_back(variety_of(ctx.ci(), m.module));
  return ctx;
}

PropertyResult oracle_agreement(const CatalogContext& ctx) {
  PropertyResult r{"oracle-agreement"};
  const auto pts = all_points(ctx.ci().field(), ctx.ci().codim());
  const int np = static_cast<int>(pts.size());
  const auto k = GradedModule::residue_field(ctx.ci().ring());
  record_all(r, static_cast<int>(ctx.modules.size()) * np, [&](int idx) {
    const int m = idx / np;
    const auto& a = pts[idx % np];
    bool oracle = membership(ctx.ci(), ctx.modules[m].module, k, a);
    bool ideal = ideal_vanishes_at(ctx.chi(), ctx.varieties[m].ideal, a);
    return std::make_pair(oracle == ideal, label(ctx, ctx.modules[m].name) + " at " + point_text(a));
  });
  return r;
}

PropertyResult residue_field_whole_space(const CatalogContext& ctx) {
  PropertyResult r{"residue-field-whole-space"};
  const auto& vk = ctx.varieties.front();
  r.record(vk.ideal.empty() && vk.stabilized, label(ctx, "k") + " annihilator");
  const auto k = GradedModule::residue_field(ctx.ci().ring());
  const auto pts = all_points(ctx.ci().field(), ctx.ci().codim(), false);
  record_all(r, static_cast<int>(pts.size()), [&](int i) {
    return std::make_pair(membership(ctx.ci(), k, k, pts[i]), label(ctx, "k") + " at " + point_text(pts[i]));
  });
  return r;
}

PropertyResult origin_iff_finite_projective_dimension(const CatalogContext& ctx) {
  PropertyResult r{"origin-iff-finite-projective-dimension"};
  const int d = ctx.ci().ring()->dim();
  for (std::size_t m = 0; m < ctx.modules.size(); ++m) {
    // Finite projective dimension over a complete intersection is at most dim R.
    FreeResolution F = minimal_resolution(ctx.modules[m].module, d + 1);
    bool finite = F.rank(d + 1) == 0;
    bool origin = dimension(ctx.varieties[m]) == 0;
    r.record(finite == origin, label(ctx, ctx.modules[m].name));
  }
  return r;
}

PropertyResult pair_is_intersection(const CatalogContext& ctx, int max_modules) {
  PropertyResult r{"pair-is-intersection"};
  const int n = std::min<int>(max_modules, static_cast<int>(ctx.modules.size()));
  const auto pts = all_points(ctx.ci().field(), ctx.ci().codim(), false);
  std::vector<std::tuple<int, int, int>> jobs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (int p = 0; p < static_cast<int>(pts.size()); ++p) jobs.emplace_back(i, j, p);
  record_all(r, static_cast<int>(jobs.size()), [&](int idx) {
    auto [i, j, p] = jobs[idx];
    auto sum = ideal_sum(ctx.chi(), ctx.varieties[i].ideal, ctx.varieties[j].ideal);
    bool oracle = membership(ctx.ci(), ctx.modules[i].module, ctx.modules[j].module, pts[p]);
    return std::make_pair(oracle == ideal_vanishes_at(ctx.chi(), sum, pts[p]),
                          label(ctx, ctx.modules[i].name + " with " + ctx.modules[j].name) + " at " + point_text(pts[p]));
  });
  return r;
}

PropertyResult pair_with_self_or_residue_field(const CatalogContext& ctx, int max_modules) {
  PropertyResult r{"pair-with-self-or-residue-field"};
  const int n = std::min<int>(max_modules, static_cast<int>(ctx.modules.size()));
  const auto pts = all_points(ctx.ci().field(), ctx.ci().codim(), false);
  const int np = static_cast<int>(pts.size());
  const auto k = GradedModule::residue_field(ctx.ci().ring());
  record_all(r, n * np, [&](int idx) {
    const auto& M = ctx.modules[idx / np].module;
    const auto& a = pts[idx % np];
    bool mm = membership(ctx.ci(), M, M, a);
    bool km = membership(ctx.ci(), k, M, a);
    bool mk = membership(ctx.ci(), M, k, a);
    return std::make_pair(mm == km && km == mk, label(ctx, ctx.modules[idx / np].name) + " at " + point_text(a));
  });
  return r;
}

PropertyResult syzygy_invariance(const CatalogContext& ctx, int max_n) {
  PropertyResult r{"syzygy-invariance"};
  for (std::size_t m = 0; m < ctx.modules.size(); ++m)
    for (int n = 1; n <= max_n; ++n) {
      GradedModule om = syzygy_module(ctx.modules[m].module, n);
      SupportVariety v = variety_of(ctx.ci(), om);
      // A free module has zero syzygies, whose variety is the origin by convention.
      r.record(same_variety(ctx.chi(), v.ideal, ctx.varieties[m].ideal),
               label(ctx, "syz" + std::to_string(n) + "(" + ctx.modules[m].name + ")"));
    }
  return r;
}

PropertyResult short_exact_sequence_inclusions(const CatalogContext& ctx) {
  PropertyResult r{"short-exact-sequence-inclusions"};
  const CIRing& ci = ctx.ci();
  const PolyRing& X = ctx.chi();
  auto check = [&](const std::string& name, const GradedModule& a, const GradedModule& b, const GradedModule& c) {
    std::vector<std::vector<Poly>> I{variety_of(ci, a).ideal, variety_of(ci, b).ideal, variety_of(ci, c).ideal};
    for (int h = 0; h < 3; ++h) {
      const int i = (h + 1) % 3, j = (h + 2) % 3;
      r.record(radical_contains(X, I[h], ideal_product(X, I[i], I[j])), label(ctx, name) + " term " + std::to_string(h + 1));
    }
  };
  for (const auto& m : ctx.modules) {
    FreeResolution F = minimal_resolution(m.module, 2);
    check("0 -> syz1(" + m.name + ") -> F0 -> " + m.name + " -> 0", syzygy_module(F, m.module, 1),
          GradedModule::free(ci.ring(), F.degrees(0)), m.module.minimize());
  }
  const auto R = GradedModule::free(ci.ring(), {0});
  PolyMatrix gx({0}, {1});
  gx.at(0, 0) = ci.poly().var(0);
  auto seq = submodule_and_quotient(R, gx);
  check("0 -> xR -> R -> R/xR -> 0", seq.sub, R, seq.quotient);
  const auto k = GradedModule::residue_field(ci.ring());
  MappingCone K = mapping_cone_module(ci, k, catalog_cone_form(ci));
  r.record(K.sequence_exact, label(ctx, "mapping cone sequence is exact"));
  check("0 -> k -> K_p -> syz(k) -> 0", K.sub, GradedModule(ci.ring(), K.raw), K.quotient);
  return r;
}

PropertyResult dual_module(const CatalogContext& ctx, std::uint64_t seed) {
  PropertyResult r{"dual-module"};
  const int m = ctx.ci().ring()->dim();
  std::vector<CatalogModule> mods;
  for (const auto& cm : ctx.modules)
    if (cm.module.krull_dim() == 0) mods.push_back(cm);
  if (m > 0)
    for (const auto& cm : ctx.modules) {
      auto fl = finite_length_form(ctx.ci(), cm.module, seed);
      if (fl.complete && fl.module.num_generators() > 0 && cm.module.krull_dim() > 0)
        mods.push_back({"finite(" + cm.name + ")", fl.module});
    }
  for (const auto& cm : mods) {
    GradedModule d = dual_ext(cm.module, m);
    r.record(same_variety(ctx.chi(), variety_of(ctx.ci(), d).ideal, variety_of(ctx.ci(), cm.module).ideal),
             label(ctx, "Ext^" + std::to_string(m) + "(" + cm.name + ", R)"));
  }
  return r;
}

PropertyResult regular_element_quotient(const CatalogContext& ctx) {
  PropertyResult r{"regular-element-quotient"};
  const PolyRing& Q = ctx.ci().poly();
  if (ctx.ci().ring()->dim() == 0) return r;
  std::vector<Poly> cands;
  for (int i = Q.nvars() - 1; i >= 0; --i) cands.push_back(Q.var(i));
  Poly sum;
  for (int i = 0; i < Q.nvars(); ++i) sum = Q.add(sum, Q.var(i));
  cands.push_back(sum);
  for (std::size_t m = 0; m < ctx.modules.size(); ++m)
    for (const auto& x : cands) {
      auto q = quotient_by_element(ctx.modules[m].module, x);
      if (!q.regular) continue;
      r.record(same_variety(ctx.chi(), variety_of(ctx.ci(), q.module).ideal, ctx.varieties[m].ideal),
               label(ctx, ctx.modules[m].name + " / (" + format_poly(Q, x) + ")"));
      break;
    }
  return r;
}

std::vector<std::vector<std::vector<Coef>>> standard_subspaces(const Field& k) {
  (void)k;
  return {{{1, 0, 0}, {0, 1, 0}}, {{1, 1, 0}, {0, 1, 1}}, {{1, 1, 1}}};
}

PropertyResult subspace_restriction(const CatalogContext& ctx, const std::vector<std::vector<std::vector<Coef>>>& subspaces) {
  PropertyResult r{"subspace-restriction"};
  for (const auto& A : subspaces) {
    CIRing sub = ctx.ci().intermediate(A);
    std::string an = "W=";
    for (const auto& row : A) an += point_text(row);
    for (std::size_t m = 0; m < ctx.modules.size(); ++m) {
      GradedModule Mr = ctx.modules[m].module.restrict_to(sub.ring());
      SupportVariety native = variety_of(sub, Mr);
      auto restricted = restrict_to_subspace(ctx.varieties[m], A, sub.chi_ring());
      r.record(native.stabilized && equal_up_to_radical(*sub.chi_ring(), native.ideal, restricted),
               label(ctx, ctx.modules[m].name + " " + an));
    }
  }
  return r;
}

PropertyResult equivalent_subspaces(const CatalogContext& ctx,
                                    const std::vector<std::pair<std::vector<std::vector<Coef>>, std::vector<std::vector<Coef>>>>& pairs) {
  PropertyResult r{"equivalent-subspaces"};
  const Field& k = ctx.ci().field();
  for (const auto& [A, B] : pairs) {
    // B = G A; restricted ideals satisfy I_B(s') = I_A(s' G).
    std::vector<std::vector<Coef>> G;
    for (const auto& row : B) G.push_back(solve_row(k, A, row));
    const int rdim = static_cast<int>(A.size());
    std::vector<std::vector<Coef>> images(static_cast<std::size_t>(rdim), std::vector<Coef>(static_cast<std::size_t>(rdim)));
    for (int j = 0; j < rdim; ++j)
      for (int l = 0; l < rdim; ++l) images[j][l] = G[l][j];
    for (std::size_t m = 0; m < ctx.modules.size(); ++m) {
      auto IA = restrict_to_subspace(ctx.varieties[m], A);
      auto IB = restrict_to_subspace(ctx.varieties[m], B);
      std::vector<std::string> names;
      for (int j = 1; j <= rdim; ++j) names.push_back("s" + std::to_string(j));
      PolyRing S(k, names);
      std::vector<Poly> moved;
      for (const auto& g : IA) moved.push_back(substitute_linear(S, S, g, images));
      r.record(buchberger(S, moved) == IB, label(ctx, ctx.modules[m].name));
    }
  }
  return r;
}

PropertyResult mapping_cone_cut(const CatalogContext& ctx) {
  PropertyResult r{"mapping-cone-cut"};
  const PolyRing& X = ctx.chi();
  std::vector<Poly> forms{catalog_cone_form(ctx.ci()), X.var(0)};
  for (std::size_t m = 0; m < ctx.modules.size() && m < 5; ++m)
    for (const auto& p : forms) {
      MappingCone K = mapping_cone_module(ctx.ci(), ctx.modules[m].module, p);
      SupportVariety v = variety_of(ctx.ci(), K.module);
      r.record(K.sequence_exact && same_variety(X, v.ideal, ideal_sum(X, ctx.varieties[m].ideal, {p})),
               label(ctx, "K(" + ctx.modules[m].name + ", " + format_poly(X, p) + ")"));
    }
  return r;
}

PropertyResult realized_cones(const CatalogContext& ctx, const std::vector<std::vector<Poly>>& specs) {
  PropertyResult r{"realized-cone"};
  const PolyRing& X = ctx.chi();
  const auto k = GradedModule::residue_field(ctx.ci().ring());
  const auto pts = all_points(ctx.ci().field(), ctx.ci().codim());
  for (const auto& spec : specs) {
    std::string name = "cone(";
    for (std::size_t i = 0; i < spec.size(); ++i) name += (i ? "," : "") + format_poly(X, spec[i]);
    name += ")";
    GradedModule M = realize_cone(ctx.ci(), spec);
    SupportVariety v = variety_of(ctx.ci(), M);
    r.record(v.stabilized && same_variety(X, v.ideal, spec), label(ctx, name + " variety"));
    auto gb = buchberger(X, spec);
    auto agree = kernels::parallel_map<char>(static_cast<int>(pts.size()), [&](int i) {
      return static_cast<char>(membership(ctx.ci(), M, k, pts[i]) == ideal_vanishes_at(X, gb, pts[i]));
    });
    for (std::size_t i = 0; i < pts.size(); ++i) r.record(agree[i] != 0, label(ctx, name + " at " + point_text(pts[i])));
  }
  return r;
}

PropertyResult tensor_over_base_instance(std::uint32_t p) {
  PropertyResult r{"tensor-over-base"};
  CatalogRing cr = ring_a2(p);
  const CIRing& ci = cr.ci;
  auto Q0 = ci.ambient();
  auto M1 = GradedModule::cyclic(Q0, {ci.poly().var(0)});
  auto M2 = GradedModule::cyclic(Q0, {ci.poly().var(1)});
  GradedModule T = tensor_over_base(M1, M2, ci.ring());
  r.record(is_residue_field(T), cr.name + " Q/(x) (x) Q/(y) is k");
  SupportVariety v = variety_of(ci, T);
  r.record(v.ideal.empty() && v.stabilized, cr.name + " variety of the tensor product is the plane");
  const std::vector<std::vector<std::vector<Coef>>> lines{{{1, 0}}, {{0, 1}}};
  const std::vector<GradedModule> factors{M1, M2};
  for (int i = 0; i < 2; ++i) {
    CIRing line = ci.intermediate(lines[i]);
    // Native variety of the factor over its own hypersurface.
    SupportVariety native = variety_of(line, factors[i].over(line.ring()));
    auto restricted = restrict_to_subspace(v, lines[i], line.chi_ring());
    r.record(equal_up_to_radical(*line.chi_ring(), native.ideal, restricted),
             cr.name + " intersection with W" + std::to_string(i + 1));
  }
  return r;
}

PropertyResult syzygy_ring_independence(const CatalogContext& ctx) {
  PropertyResult r{"syzygy-ring-independence"};
  const CIRing& ci = ctx.ci();
  const int c = ci.codim();
  if (c < 2) return r;
  std::vector<Coef> first(static_cast<std::size_t>(c), 0);
  first[0] = 1;
  CIRing A = ci.intermediate({first});
  const int pd = c - 1;  // R = A/(f_2..f_c) with a regular sequence: Koszul.
  for (std::size_t m = 0; m < ctx.modules.size() && m < 5; ++m)
    for (int n = 0; n <= 2; ++n) {
      GradedModule overB = syzygy_module(ctx.modules[m].module, n).restrict_to(A.ring());
      GradedModule overA = syzygy_module(ctx.modules[m].module.restrict_to(A.ring()), n);
      FreeResolution FB = minimal_resolution(overB, pd + 3);
      FreeResolution FA = minimal_resolution(overA, pd + 3);
      for (int i = pd + 1; i <= pd + 3; ++i)
        r.record(FB.rank(i) == FA.rank(i), label(ctx, ctx.modules[m].name + " n=" + std::to_string(n) + " i=" + std::to_string(i)));
    }
  return r;
}

PropertyResult dimension_equals_complexity(const CatalogContext& ctx) {
  PropertyResult r{"dimension-equals-complexity"};
  const int W = default_window(ctx.ci());
  for (std::size_t m = 0; m < ctx.modules.size(); ++m) {
    FreeResolution F = minimal_resolution(ctx.modules[m].module, W);
    ComplexityEstimate est = complexity_estimate(F.betti(), ctx.ci().nvars());
    r.record(est.reliable && est.complexity == dimension(ctx.varieties[m]), label(ctx, ctx.modules[m].name));
  }
  return r;
}

PropertyResult operator_identities(const CatalogContext& ctx, int window) {
  PropertyResult r{"operator-identities"};
  const CIRing& ci = ctx.ci();
  for (const auto& cm : ctx.modules) {
    FreeResolution F = minimal_resolution(cm.module, window);
    auto lifted = lift_to_ambient(F);
    OperatorFamily a = operator_family(ci.poly(), lifted, ci.fs(), DivisorChoice::First);
    OperatorFamily b = operator_family(ci.poly(), lifted, ci.fs(), DivisorChoice::Last);
    ExtKModule Ea = ext_module(F, a), Eb = ext_module(F, b);
    r.record(satisfies_defining_identity(ci.poly(), lifted, a) && satisfies_defining_identity(ci.poly(), lifted, b),
             label(ctx, cm.name + " defining identity"));
    r.record(operators_are_chain_maps(F, a) && operators_are_chain_maps(F, b), label(ctx, cm.name + " chain maps"));
    r.record(Ea.commutes() && Eb.commutes(), label(ctx, cm.name + " commuting actions"));
    r.record(Ea.action == Eb.action, label(ctx, cm.name + " witness independence"));
  }
  return r;
}

PropertyResult finite_length_forms(const CatalogContext& ctx, std::uint64_t seed) {
  PropertyResult r{"finite-length-form"};
  for (std::size_t m = 0; m < ctx.modules.size(); ++m) {
    auto fl = finite_length_form(ctx.ci(), ctx.modules[m].module, seed);
    bool ok = fl.complete && fl.module.krull_dim() <= 0 &&
              same_variety(ctx.chi(), variety_of(ctx.ci(), fl.module).ideal, ctx.varieties[m].ideal);
    r.record(ok, label(ctx, ctx.modules[m].name));
  }
  return r;
}

std::vector<PropertyResult> run_check_suite(const std::function<void(const std::string&)>& progress, std::uint64_t seed) {
  auto note = [&](const std::string& s) {
    if (progress) progress(s);
  };
  note("catalog");
  std::vector<CatalogContext> rings;
  rings.push_back(make_context(ring_a2(3)));
  rings.push_back(make_context(ring_a3(3)));
  rings.push_back(make_context(ring_b(3)));
  rings.push_back(make_context(ring_c(5)));
  const CatalogContext& a2 = rings[0];
  const CatalogContext& a3 = rings[1];

  std::vector<PropertyResult> out;
  auto merge = [&](const std::string& name, const std::function<PropertyResult(const CatalogContext&)>& f) {
    note(name);
    PropertyResult total{name};
    for (const auto& ctx : rings) {
      PropertyResult one = f(ctx);
      total.cases += one.cases;
      total.failures += one.failures;
      total.failed.insert(total.failed.end(), one.failed.begin(), one.failed.end());
    }
    out.push_back(std::move(total));
  };
  merge("residue-field-whole-space", residue_field_whole_space);
  merge("origin-iff-finite-projective-dimension", origin_iff_finite_projective_dimension);
  note("pair-is-intersection");
  out.push_back(pair_is_intersection(a2, 5));
  note("pair-with-self-or-residue-field");
  out.push_back(pair_with_self_or_residue_field(a2, 5));
  merge("syzygy-invariance", [](const CatalogContext& c) { return syzygy_invariance(c); });
  merge("short-exact-sequence-inclusions", short_exact_sequence_inclusions);
  merge("dual-module", [&](const CatalogContext& c) { return dual_module(c, seed); });
  merge("regular-element-quotient", regular_element_quotient);
  note("subspace-restriction");
  out.push_back(subspace_restriction(a3, standard_subspaces(a3.ci().field())));
  note("equivalent-subspaces");
  out.push_back(equivalent_subspaces(a3, {{{{1, 0, 0}, {0, 1, 0}}, {{1, 1, 0}, {1, 2, 0}}},
                                          {{{1, 1, 0}, {0, 1, 1}}, {{1, 2, 1}, {2, 2, 0}}},
                                          {{{1, 1, 1}}, {{2, 2, 2}}}}));
  merge("mapping-cone-cut", mapping_cone_cut);
  note("realized-cone");
  out.push_back(realized_cones(a3, {{parse_poly(a3.chi(), "chi1*chi2 - chi3^2")}, {a3.chi().var(0), a3.chi().var(1)}}));
  note("tensor-over-base");
  out.push_back(tensor_over_base_instance(3));
  merge("syzygy-ring-independence", syzygy_ring_independence);
  merge("dimension-equals-complexity", dimension_equals_complexity);
  merge("operator-identities", [](const CatalogContext& c) { return operator_identities(c); });
  merge("finite-length-form", [&](const CatalogContext& c) { return finite_length_forms(c, seed); });
  merge("oracle-agreement", oracle_agreement);
  return out;
}

}  // namespace cisupport
