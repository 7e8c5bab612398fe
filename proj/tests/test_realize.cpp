#include <doctest.h>

#include "cisupport/realize/realize.hpp"
#include "support.hpp"

using namespace cisupport;
using namespace cisupport::testing;

namespace {

CIRing ci(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> fs) {
  auto Q = make_ring(p, std::move(vars));
  return CIRing(Q, Ps(Q, fs));
}

}  // namespace

TEST_CASE("mapping cone on the residue field of the codimension three ring") {
  auto R = ci(5, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  auto X = R.chi_ring();
  auto k = GradedModule::residue_field(R.ring());
  MappingCone K = mapping_cone_module(R, k, P(X, "chi1*chi2 - chi3^2"));
  CHECK(K.cohomological_degree == 4);
  REQUIRE(K.raw.rows() == 11);
  REQUIRE(K.raw.cols() == 18);
  FreeResolution F = minimal_resolution(k, 4);
  const PolyRing& Q = R.poly();
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 15; ++j) CHECK(K.raw.at(i, j) == Q.neg(F.differential(4).at(i, j)));
    for (int j = 15; j < 18; ++j) CHECK(K.raw.at(i, j).is_zero());
  }
  for (int j = 0; j < 3; ++j) CHECK(K.raw.at(10, 15 + j) == F.differential(1).at(0, j));
  int units = 0;
  for (int j = 0; j < 15; ++j)
    if (!K.raw.at(10, j).is_zero()) {
      CHECK(K.raw.at(10, j).is_constant());
      ++units;
    }
  CHECK(units == 2);
  CHECK(K.sequence_exact);
  CHECK(K.module.num_generators() == 10);
}

TEST_CASE("mapping cone over k[x]/(x^2) prunes to a free module") {
  auto R = ci(101, {"x"}, {"x^2"});
  auto X = R.chi_ring();
  MappingCone K = mapping_cone_module(R, GradedModule::residue_field(R.ring()), P(X, "chi1"));
  CHECK(K.raw.rows() == 2);
  CHECK(K.raw.cols() == 2);
  CHECK(K.module.num_generators() == 1);
  CHECK(K.module.num_relations() == 0);
  CHECK(K.sequence_exact);
  SupportVariety v = variety_of(R, K.module);
  CHECK(S(X, v.ideal.at(0)) == "chi1");
  CHECK_THROWS(mapping_cone_module(R, GradedModule::residue_field(R.ring()), X->one()));
}

TEST_CASE("mapping cone shape law") {
  auto R = ci(3, {"x", "y"}, {"x^2", "y^2"});
  auto X = R.chi_ring();
  auto Q = R.poly_ptr();
  auto M = GradedModule::cyclic(R.ring(), Ps(Q, {"x"}));
  for (const char* p : {"chi1", "chi2", "chi1 + chi2", "chi1^2 - chi2^2"}) {
    Poly f = P(X, p);
    MappingCone K = mapping_cone_module(R, M, f);
    FreeResolution F = minimal_resolution(M, K.cohomological_degree);
    CHECK(K.raw.rows() == F.rank(K.cohomological_degree - 1) + F.rank(0));
    CHECK(K.raw.cols() == F.rank(K.cohomological_degree) + F.rank(1));
    CHECK(K.sequence_exact);
    // The variety of K_p is V(M) cut by p.
    SupportVariety vm = variety_of(R, M);
    SupportVariety vk = variety_of(R, K.module);
    CHECK(equal_up_to_radical(*X, vk.ideal, ideal_sum(*X, vm.ideal, {f})));
  }
}

TEST_CASE("realized cones") {
  auto R = ci(3, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  auto X = R.chi_ring();
  GradedModule k = realize_cone(R, {});
  CHECK(k.presentation() == GradedModule::residue_field(R.ring()).minimize().presentation());
  GradedModule M = realize_cone(R, {P(X, "chi1*chi2 - chi3^2")});
  SupportVariety v = variety_of(R, M);
  CHECK(v.stabilized);
  CHECK(equal_up_to_radical(*X, v.ideal, Ps(X, {"chi1*chi2 - chi3^2"})));

  auto R2 = ci(3, {"x", "y"}, {"x^2", "y^2"});
  auto X2 = R2.chi_ring();
  GradedModule origin = realize_cone(R2, Ps(X2, {"chi1", "chi2"}));
  FreeResolution F = minimal_resolution(origin, 6);
  CHECK(F.finite);
}

TEST_CASE("finite-length forms") {
  auto R = ci(101, {"x", "y"}, {"x^2", "y^2"});
  auto k = GradedModule::residue_field(R.ring());
  auto fl = finite_length_form(R, k);
  CHECK(fl.complete);
  CHECK(fl.module.presentation() == k.presentation());

  auto C = ci(101, {"x", "y", "z"}, {"x^2"});
  auto free = GradedModule::free(C.ring(), {0});
  auto fc = finite_length_form(C, free);
  CHECK(fc.complete);
  CHECK(fc.syzygy == 0);
  CHECK(fc.regular_sequence.size() == 2);
  CHECK(fc.module.length() == 2);
  CHECK(fc.module.krull_dim() == 0);
  SupportVariety before = variety_of(C, free), after = variety_of(C, fc.module);
  CHECK(equal_up_to_radical(*C.chi_ring(), before.ideal, after.ideal));

  // k already has finite length.
  auto kc = GradedModule::residue_field(C.ring());
  CHECK(finite_length_form(C, kc).syzygy == 0);
  // R/(y) has depth one in a ring of dimension two: one syzygy first.
  auto my = GradedModule::cyclic(C.ring(), Ps(C.poly_ptr(), {"y"}));
  auto fy = finite_length_form(C, my);
  CHECK(fy.complete);
  CHECK(fy.syzygy == 1);
  CHECK(fy.module.krull_dim() == 0);
  CHECK(equal_up_to_radical(*C.chi_ring(), variety_of(C, fy.module).ideal, variety_of(C, my).ideal));
  // R/(x) is maximal Cohen-Macaulay with a nontrivial variety.
  auto mx = GradedModule::cyclic(C.ring(), Ps(C.poly_ptr(), {"x"}));
  auto fx = finite_length_form(C, mx);
  CHECK(fx.complete);
  CHECK(fx.syzygy == 0);
  CHECK(equal_up_to_radical(*C.chi_ring(), variety_of(C, fx.module).ideal, variety_of(C, mx).ideal));
}
