#include <doctest.h>

#include "cisupport/eisenbud/operators.hpp"
#include "support.hpp"

using namespace cisupport;
using namespace cisupport::testing;

namespace {

CIRing ci(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> fs) {
  auto Q = make_ring(p, std::move(vars));
  return CIRing(Q, Ps(Q, fs));
}

}  // namespace

TEST_CASE("lifts of reduced differentials are unchanged") {
  auto R = ci(101, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  FreeResolution F = minimal_resolution(GradedModule::residue_field(R.ring()), 4);
  auto lifted = lift_to_ambient(F);
  REQUIRE(lifted.size() == 4);
  for (int n = 1; n <= 4; ++n) CHECK(lifted[n - 1] == F.differential(n));
  auto R1 = ci(101, {"x"}, {"x^2"});
  FreeResolution F1 = minimal_resolution(GradedModule::residue_field(R1.ring()), 3);
  for (const auto& d : lift_to_ambient(F1)) CHECK(S(R1.poly_ptr(), R1.poly().monic(d.at(0, 0))) == "x");
}

TEST_CASE("operators over k[x]/(x^2)") {
  auto R = ci(101, {"x"}, {"x^2"});
  FreeResolution F = minimal_resolution(GradedModule::residue_field(R.ring()), 6);
  auto lifted = lift_to_ambient(F);
  OperatorFamily ops = operator_family(R.poly(), lifted, R.fs());
  CHECK(satisfies_defining_identity(R.poly(), lifted, ops));
  CHECK(operators_are_chain_maps(F, ops));
  for (int n = 2; n <= 6; ++n) {
    REQUIRE(ops.t[0][n].rows() == 1);
    // d_n = c x with c = +-1 depending on the sign choice: t = product of the signs.
    Coef s = R.field().mul(lifted[n - 2].at(0, 0).lead().c, lifted[n - 1].at(0, 0).lead().c);
    CHECK(ops.t[0][n].at(0, 0) == R.poly().constant(s));
  }
  ExtKModule E = ext_module(F, ops);
  for (int n = 0; n + 2 <= 6; ++n) CHECK(kernels::rank(R.field(), E.action[0][n]) == 1);
}

TEST_CASE("operators on R/(x) over k[x,y]/(x^2,y^2)") {
  auto R = ci(101, {"x", "y"}, {"x^2", "y^2"});
  auto M = GradedModule::cyclic(R.ring(), Ps(R.poly_ptr(), {"x"}));
  ExtKModule E = chi_action(R, M, 8);
  for (int n = 0; n <= 8; ++n) CHECK(E.dims[n] == 1);
  for (int n = 0; n + 2 <= 8; ++n) {
    CHECK(E.action[0][n].at(0, 0) != 0);
    CHECK(E.action[1][n].at(0, 0) == 0);
  }
  auto wb = member_witness(R.poly(), R.poly().var(0), R.fs());
  CHECK_FALSE(wb);
  auto w = member_witness(R.poly(), P(R.poly_ptr(), "x^2"), R.fs());
  REQUIRE(w);
  CHECK(S(R.poly_ptr(), (*w)[0]) == "1");
  CHECK((*w)[1].is_zero());
}

TEST_CASE("free modules have no higher Ext") {
  auto R = ci(101, {"x", "y"}, {"x^2", "y^2"});
  ExtKModule E = chi_action(R, GradedModule::free(R.ring(), {0, 1}), 6);
  CHECK(E.dims[0] == 2);
  for (int n = 1; n <= 6; ++n) CHECK(E.dims[n] == 0);
  CHECK(E.commutes());
}

TEST_CASE("actions commute and do not depend on the witness strategy") {
  auto R = ci(3, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  auto Q = R.poly_ptr();
  std::vector<GradedModule> mods{GradedModule::residue_field(R.ring()), GradedModule::cyclic(R.ring(), Ps(Q, {"x"})),
                                 GradedModule::cyclic(R.ring(), Ps(Q, {"x+y", "z"}))};
  for (const auto& M : mods) {
    FreeResolution F = minimal_resolution(M, 10);
    auto lifted = lift_to_ambient(F);
    OperatorFamily a = operator_family(R.poly(), lifted, R.fs(), DivisorChoice::First);
    OperatorFamily b = operator_family(R.poly(), lifted, R.fs(), DivisorChoice::Last);
    CHECK(satisfies_defining_identity(R.poly(), lifted, a));
    CHECK(satisfies_defining_identity(R.poly(), lifted, b));
    CHECK(operators_are_chain_maps(F, a));
    ExtKModule Ea = ext_module(F, a), Eb = ext_module(F, b);
    CHECK(Ea.commutes());
    CHECK(Ea.action == Eb.action);
  }
}

TEST_CASE("non-monomial complete intersection") {
  auto R = ci(101, {"x", "y", "z"}, {"x^2 + y*z", "y^2 - x*z", "z^2"});
  FreeResolution F = minimal_resolution(GradedModule::residue_field(R.ring()), 6);
  auto lifted = lift_to_ambient(F);
  OperatorFamily a = operator_family(R.poly(), lifted, R.fs(), DivisorChoice::First);
  OperatorFamily b = operator_family(R.poly(), lifted, R.fs(), DivisorChoice::Last);
  CHECK(satisfies_defining_identity(R.poly(), lifted, a));
  CHECK(operators_are_chain_maps(F, a));
  CHECK(operators_are_chain_maps(F, b));
  CHECK(ext_module(F, a).action == ext_module(F, b).action);
  CHECK(ext_module(F, a).commutes());
}

TEST_CASE("chi classes as chain maps") {
  auto R = ci(101, {"x"}, {"x^2"});
  FreeResolution F = minimal_resolution(GradedModule::residue_field(R.ring()), 6);
  OperatorFamily ops = operator_family(R.poly(), lift_to_ambient(F), R.fs());
  auto X = R.chi_ring();
  auto P1 = evaluate_chi_class(R, P(X, "chi1"), F, ops);
  for (int n = 2; n <= 6; ++n) CHECK(P1[n] == ops.t[0][n]);
  auto id = evaluate_chi_class(R, X->one(), F, ops);
  for (int n = 0; n <= 6; ++n) CHECK(id[n] == identity_matrix(R.poly(), F.degrees(n)));

  auto R3 = ci(5, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  FreeResolution F3 = minimal_resolution(GradedModule::residue_field(R3.ring()), 6);
  OperatorFamily ops3 = operator_family(R3.poly(), lift_to_ambient(F3), R3.fs());
  ExtKModule E = ext_module(F3, ops3);
  auto X3 = R3.chi_ring();
  for (int i = 0; i < 3; ++i) {
    auto Pi = evaluate_chi_class(R3, X3->var(i), F3, ops3);
    for (int n = 2; n <= 6; ++n) CHECK(kernels::transpose([&] {
                                         kernels::DenseMatrix m(Pi[n].rows(), Pi[n].cols());
                                         for (int r = 0; r < m.rows; ++r)
                                           for (int c = 0; c < m.cols; ++c) m.at(r, c) = Pi[n].at(r, c).constant_term();
                                         return m;
                                       }()) == E.action[i][n - 2]);
  }
  auto P4 = evaluate_chi_class(R3, P(X3, "chi1*chi2 - chi3^2"), F3, ops3);
  REQUIRE(P4[4].rows() == 1);
  REQUIRE(P4[4].cols() == 15);
  // Two unit entries of opposite sign, everything else zero.
  std::vector<Coef> nonzero;
  for (int c = 0; c < 15; ++c) {
    const Poly& e = P4[4].at(0, c);
    if (e.is_zero()) continue;
    CHECK(e.is_constant());
    nonzero.push_back(e.constant_term());
  }
  REQUIRE(nonzero.size() == 2);
  std::sort(nonzero.begin(), nonzero.end());
  CHECK(nonzero == std::vector<Coef>{1, 4});
}
