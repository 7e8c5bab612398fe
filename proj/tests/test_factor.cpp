#include <doctest.h>

#include "cisupport/exactalg/factor.hpp"
#include "support.hpp"

using namespace cisupport;
using namespace cisupport::testing;

namespace {

UPoly product(const Field& k, const std::vector<std::pair<UPoly, int>>& fs) {
  UPoly acc{1};
  for (const auto& [g, m] : fs)
    for (int i = 0; i < m; ++i) acc = upoly::mul(k, acc, g);
  return acc;
}

// Brute-force irreducibility: no monic divisor of degree <= n/2 over a tiny field.
bool irreducible_brute(const Field& k, const UPoly& f) {
  int n = upoly::degree(f);
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<Coef> c(static_cast<std::size_t>(d), 0);
    while (true) {
      UPoly g = c;
      g.push_back(1);
      if (upoly::mod(k, f, g).empty()) return false;
      int pos = 0;
      while (pos < d && ++c[pos] == k.size()) c[pos++] = 0;
      if (pos == d) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("univariate factorization multiplies back to the input") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    Field k(p);
    UPoly f{1, 0, 1, 1, 0, 1, 1, 1, 0, 1};  // some degree-9 polynomial
    for (auto& c : f) c %= p;
    upoly::trim(f);
    UPoly sq = upoly::mul(k, f, upoly::mul(k, UPoly{1, 1}, UPoly{1, 1}));
    for (const UPoly& g : {f, sq}) {
      auto fac = factor_univariate(k, g);
      CHECK(product(k, fac) == upoly::monic(k, g));
      for (const auto& [h, m] : fac) CHECK(irreducible_brute(k, h));
    }
  }
}

TEST_CASE("factorization over extension fields") {
  Field k(2, 2);
  UPoly f{1, 1, 1};  // t^2 + t + 1 splits over GF(4)
  auto fac = factor_univariate(k, f);
  CHECK(fac.size() == 2);
  CHECK(product(k, fac) == f);
}

TEST_CASE("homogeneous factor counts") {
  auto C = make_ring(5, {"chi1", "chi2", "chi3"});
  auto f1 = homogeneous_irreducible_factors(*C, P(C, "chi1*chi2"));
  REQUIRE(f1);
  CHECK(f1->size() == 2);
  auto f2 = homogeneous_irreducible_factors(*C, P(C, "chi1"));
  REQUIRE(f2);
  CHECK(f2->size() == 1);
  auto f3 = homogeneous_irreducible_factors(*C, P(C, "chi1*chi2 - chi3^2"));
  REQUIRE(f3);
  CHECK(f3->size() == 1);
  auto f4 = homogeneous_irreducible_factors(*C, P(C, "chi1^2 - chi2^2"));
  REQUIRE(f4);
  CHECK(f4->size() == 2);
  auto f5 = homogeneous_irreducible_factors(*C, P(C, "chi3^2*(chi1 + chi2)^3"));
  REQUIRE(f5);
  CHECK(f5->size() == 2);
}

TEST_CASE("quadric chi1*chi2 - chi3^2 has no linear factor over F5 (exhaustive)") {
  auto C = make_ring(5, {"chi1", "chi2", "chi3"});
  Poly q = P(C, "chi1*chi2 - chi3^2");
  int divisors = 0;
  for (Coef a = 0; a < 5; ++a)
    for (Coef b = 0; b < 5; ++b)
      for (Coef c = 0; c < 5; ++c) {
        if (!a && !b && !c) continue;
        Poly l = C->add(C->add(C->scale(P(C, "chi1"), a), C->scale(P(C, "chi2"), b)), C->scale(P(C, "chi3"), c));
        if (divide_exact(*C, q, l)) ++divisors;
      }
  CHECK(divisors == 0);
}
