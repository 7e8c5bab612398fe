#include "cisupport/cli/run.hpp"

#include "cisupport/cli/suite.hpp"
#include "cisupport/eisenbud/operators.hpp"
#include "cisupport/exactalg/poly_text.hpp"
#include "cisupport/realize/realize.hpp"
#include "cisupport/variety/variety.hpp"

namespace cisupport {

using nlohmann::ordered_json;

namespace {

ordered_json strings(const PolyRing& R, const std::vector<Poly>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(format_poly(R, p));
  return a;
}

ordered_json dense_json(const kernels::DenseMatrix& m) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    a.push_back(row);
  }
  return a;
}

std::vector<Coef> field_point(const Field& k, const std::vector<long long>& v) {
  std::vector<Coef> out;
  for (auto a : v) out.push_back(k.from_int(a));
  return out;
}

VarietyOptions variety_options(const CommandSpec& c) {
  VarietyOptions o;
  if (c.window) o.window = *c.window;
  if (c.degree_bound) o.degree_bound = *c.degree_bound;
  return o;
}

ordered_json variety_json(const CIRing& ci, const SupportVariety& v) {
  ordered_json j;
  j["ideal"] = strings(*ci.chi_ring(), v.ideal);
  j["dimension"] = dimension(v);
  j["stabilized"] = v.stabilized;
  j["window"] = v.window_used;
  j["degree_bound"] = v.degree_bound;
  return j;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ordered_json matrix_json(const PolyRing& Q, const PolyMatrix& m) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_poly(Q, m.at(i, j)));
    a.push_back(row);
  }
  return a;
}

RunReport run_check(std::uint64_t seed, const std::function<void(const std::string&)>& progress) {
  RunReport rep;
  auto results = run_check_suite(progress, seed);
  ordered_json props = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    ordered_json p;
    p["name"] = r.name;
    p["cases"] = r.cases;
    p["failures"] = r.failures;
    p["passed"] = r.passed();
    p["failed"] = r.failed;
    props.push_back(p);
    all = all && r.passed();
  }
  rep.json["command"] = "check";
  rep.json["seed"] = seed;
  rep.json["result"] = {{"passed", all}, {"properties", props}};
  if (!all) rep.exit_code = kExitCheckFailed;
  return rep;
}

RunReport run(const JobSpec& job, const std::function<void(const std::string&)>& progress) {
  require(job.command.has_value() && !job.command->name.empty(), "no command given");
  const CommandSpec& c = *job.command;
  const std::uint64_t seed = c.seed.value_or(1);
  if (c.name == "check") return run_check(seed, progress);

  JobContext ctx = materialize(job);
  const CIRing& ci = ctx.ci;
  const PolyRing& Q = ci.poly();
  const PolyRing& X = *ci.chi_ring();
  require(!ctx.modules.empty() || c.name == "realize", "the job declares no module");
  const std::string mname = c.module.value_or(ctx.modules.empty() ? "" : ctx.modules.front().first);

  RunReport rep;
  ordered_json& out = rep.json;
  out["command"] = c.name;
  out["ring"] = {{"p", job.p}, {"vars", job.vars}, {"relations", job.relations}};
  if (c.name != "realize") out["module"] = mname;
  ordered_json res;

  if (c.name == "resolve" || c.name == "betti") {
    const GradedModule& M = ctx.module(mname);
    const int L = c.length.value_or(5);
    FreeResolution F = minimal_resolution(M, L);
    BettiTable b = F.betti();
    res["length"] = L;
    res["finite"] = F.finite;
    res["ranks"] = b.ranks;
    if (c.name == "betti") {
      ordered_json g = ordered_json::array();
      for (const auto& t : b.graded()) g.push_back({t[0], t[1], t[2]});
      res["graded"] = g;
    } else {
      res["degrees"] = b.degrees;
      ordered_json ds = ordered_json::array();
      for (int n = 1; n <= L; ++n) ds.push_back(matrix_json(Q, F.differential(n)));
      res["differentials"] = ds;
    }
  } else if (c.name == "operators") {
    const GradedModule& M = ctx.module(mname);
    const int W = c.window.value_or(10);
    FreeResolution F = minimal_resolution(M, W);
    auto lifted = lift_to_ambient(F);
    OperatorFamily a = operator_family(Q, lifted, ci.fs(), DivisorChoice::First);
    OperatorFamily b = operator_family(Q, lifted, ci.fs(), DivisorChoice::Last);
    ExtKModule Ea = ext_module(F, a), Eb = ext_module(F, b);
    res["window"] = W;
    res["ext_dims"] = Ea.dims;
    res["defining_identity"] = satisfies_defining_identity(Q, lifted, a);
    res["chain_maps"] = operators_are_chain_maps(F, a);
    res["commute"] = Ea.commutes();
    res["witness_independent"] = Ea.action == Eb.action;
    ordered_json acts = ordered_json::array();
    for (int i = 0; i < ci.codim(); ++i) {
      ordered_json per = ordered_json::array();
      for (const auto& m : Ea.action[i]) per.push_back(dense_json(m));
      acts.push_back({{"operator", X.names()[i]}, {"matrices", per}});
    }
    res["actions"] = acts;
  } else if (c.name == "variety") {
    const GradedModule& M = ctx.module(mname);
    SupportVariety v = c.with ? variety_of_pair(ci, M, ctx.module(*c.with), variety_options(c)) : variety_of(ci, M, variety_options(c));
    if (c.with) res["with"] = *c.with;
    res.update(variety_json(ci, v));
    if (!c.with) {
      const int W = v.window_used;
      ComplexityEstimate est = complexity_estimate(minimal_resolution(M, W).betti(), ci.nvars());
      res["complexity"] = {{"value", est.complexity}, {"reliable", est.reliable}};
    }
    if (!v.stabilized) {
      rep.warnings.push_back("variety did not stabilize between windows " + std::to_string(v.window_used) + " and " +
                             std::to_string(v.window_used + 2));
      if (!c.allow_unstable) rep.exit_code = kExitUnstable;
    }
  } else if (c.name == "member") {
    require(c.point.has_value(), "member needs --point");
    const GradedModule& M = ctx.module(mname);
    const auto a = field_point(ci.field(), *c.point);
    GradedModule N = c.with ? ctx.module(*c.with) : GradedModule::residue_field(ci.ring());
    res["point"] = a;
    res["with"] = c.with.value_or("k");
    res["member"] = membership(ci, M, N, a);
  } else if (c.name == "restrict") {
    require(c.subspace.has_value(), "restrict needs --subspace");
    const GradedModule& M = ctx.module(mname);
    std::vector<std::vector<Coef>> A(static_cast<std::size_t>(c.subspace->rows));
    for (int i = 0; i < c.subspace->rows; ++i)
      for (int j = 0; j < c.subspace->cols; ++j) A[i].push_back(ci.field().from_int(c.subspace->entries[i * c.subspace->cols + j]));
    SupportVariety v = variety_of(ci, M, variety_options(c));
    CIRing sub = ci.intermediate(A);
    SupportVariety native = variety_of(sub, M.restrict_to(sub.ring()), variety_options(c));
    auto restricted = restrict_to_subspace(v, A, sub.chi_ring());
    res["subspace"] = A;
    res["intermediate_relations"] = strings(Q, sub.fs());
    res["restricted"] = strings(*sub.chi_ring(), restricted);
    res["native"] = variety_json(sub, native);
    res["agree"] = equal_up_to_radical(*sub.chi_ring(), native.ideal, restricted);
    if (!v.stabilized || !native.stabilized) {
      rep.warnings.push_back("a variety in the restriction did not stabilize");
      if (!c.allow_unstable) rep.exit_code = kExitUnstable;
    }
  } else if (c.name == "realize") {
    require(c.cone.has_value(), "realize needs --cone");
    std::vector<Poly> ps;
    for (const auto& s : *c.cone) ps.push_back(parse_poly(X, s));
    GradedModule M = realize_cone(ci, ps);
    SupportVariety v = variety_of(ci, M, variety_options(c));
    res["cone"] = *c.cone;
    res["presentation"] = {{"row_degrees", M.presentation().row_degrees()},
                           {"col_degrees", M.presentation().col_degrees()},
                           {"matrix", matrix_json(Q, M.presentation())}};
    res["variety"] = variety_json(ci, v);
    res["agree"] = equal_up_to_radical(X, v.ideal, ps);
    if (!v.stabilized) {
      rep.warnings.push_back("variety of the realized module did not stabilize");
      if (!c.allow_unstable) rep.exit_code = kExitUnstable;
    }
  } else {
    throw std::invalid_argument("unknown command '" + c.name + "'");
  }
  out["result"] = res;
  return rep;
}

}  // namespace cisupport
