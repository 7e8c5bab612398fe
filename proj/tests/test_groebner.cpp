#include <doctest.h>

#include <algorithm>
#include <random>

#include "cisupport/exactalg/ideal.hpp"
#include "support.hpp"

using namespace cisupport;
using namespace cisupport::testing;

namespace {

// Independent check of the Buchberger criterion: every S-polynomial of the
// basis has remainder zero under naive division.
bool s_pairs_reduce(const PolyRing& R, const std::vector<Poly>& gb) {
  const Field& k = R.field();
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      Monomial l = R.lcm(gb[i].lead().m, gb[j].lead().m);
      Poly a = R.mul_term(gb[i], k.inv(gb[i].lead().c), mono_div(l, gb[i].lead().m));
      Poly b = R.mul_term(gb[j], k.inv(gb[j].lead().c), mono_div(l, gb[j].lead().m));
      if (!reduce_poly(R, gb, R.sub(a, b)).is_zero()) return false;
    }
  return true;
}

bool is_reduced(const std::vector<Poly>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb[i].lead().c != 1) return false;
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[j].terms())
        if (divides(gb[i].lead().m, t.m)) return false;
    }
  }
  return true;
}

Poly random_form(const PolyRing& R, int deg, std::mt19937& rng, int terms) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> var(0, R.nvars() - 1);
  std::uniform_int_distribution<Coef> coef(1, R.field().size() - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(R.nvars(), 0);
    for (int d = 0; d < deg; ++d) ++e[var(rng)];
    ts.push_back(Term{coef(rng), R.monomial(e)});
  }
  return R.normalize(ts);
}

}  // namespace

TEST_CASE("buchberger on the documented examples") {
  auto R = make_ring(101, {"x", "y", "z"});
  auto gb = buchberger(*R, Ps(R, {"x^2", "y^2"}));
  REQUIRE(gb.size() == 2);
  CHECK(S(R, gb[0]) == "x^2");
  CHECK(S(R, gb[1]) == "y^2");

  auto R5 = make_ring(5, {"x", "y"});
  auto gb5 = buchberger(*R5, Ps(R5, {"x^2 - y^2", "x^2 + y^2"}));
  REQUIRE(gb5.size() == 2);
  CHECK(S(R5, gb5[0]) == "x^2");
  CHECK(S(R5, gb5[1]) == "y^2");

  auto C = make_ring(101, {"chi1", "chi2", "chi3"});
  auto gbc = buchberger(*C, Ps(C, {"chi1*chi2 - chi3^2"}));
  REQUIRE(gbc.size() == 1);
  CHECK(S(C, gbc[0]) == "chi1*chi2 - chi3^2");
}

TEST_CASE("buchberger rejects polynomials from a larger ring") {
  auto R = make_ring(101, {"x", "y"});
  auto R3 = make_ring(101, {"x", "y", "z"});
  CHECK_THROWS(buchberger(*R, {P(R3, "z^2")}));
}

TEST_CASE("normal form examples and idempotence") {
  auto R = make_ring(101, {"x", "y"});
  auto gb = buchberger(*R, Ps(R, {"x^2", "y^2"}));
  CHECK(S(R, normal_form(*R, P(R, "x^2 + x*y"), gb)) == "x*y");
  CHECK(normal_form(*R, P(R, "x^2"), gb).is_zero());
  CHECK(S(R, normal_form(*R, P(R, "x"), gb)) == "x");
}

TEST_CASE("random ideals: criterion, reducedness, permutation determinism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto R = make_ring(trial % 2 ? 101 : 7, {"x", "y", "z"});
    std::vector<Poly> gens;
    int ng = 2 + trial % 3;
    for (int i = 0; i < ng; ++i) gens.push_back(random_form(*R, 2 + (i + trial) % 2, rng, 3));
    auto gb = buchberger(*R, gens);
    CHECK(s_pairs_reduce(*R, gb));
    CHECK(is_reduced(gb));
    for (const auto& g : gens) CHECK(normal_form(*R, g, gb).is_zero());
    auto perm = gens;
    std::reverse(perm.begin(), perm.end());
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(buchberger(*R, perm) == gb);
    for (int s = 0; s < 5; ++s) {
      Poly f = random_form(*R, 3, rng, 4);
      Poly nf = normal_form(*R, f, gb);
      CHECK(normal_form(*R, nf, gb) == nf);
    }
  }
}

TEST_CASE("non-homogeneous input") {
  auto R = make_ring(101, {"x", "y"});
  auto gb = buchberger(*R, Ps(R, {"x^2 - y", "x*y - 1"}));
  CHECK(s_pairs_reduce(*R, gb));
  CHECK(is_reduced(gb));
  auto unit = buchberger(*R, Ps(R, {"x", "x - 1"}));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_constant());
}

TEST_CASE("module basis with minimal generator detection") {
  auto R = make_ring(101, {"x", "y"});
  GroebnerEngine eng(*R, ModuleOrder::graded({0}));
  eng.add_generator(vec::from_poly(P(R, "x"), 0));
  eng.add_generator(vec::from_poly(P(R, "x*y"), 0));
  eng.add_generator(vec::from_poly(P(R, "y^2"), 0));
  eng.add_generator(vec::from_poly(P(R, "x^2 + y^2"), 0));
  eng.run();
  CHECK(eng.minimal_generators() == std::vector<int>{0, 2});
}
