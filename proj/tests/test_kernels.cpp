#include <doctest.h>

#include <random>

#include "cisupport/kernels/dense_modp.hpp"
#include "cisupport/kernels/parallel.hpp"

using namespace cisupport;
using namespace cisupport::kernels;

namespace {

DenseMatrix random_matrix(int r, int c, std::uint32_t p, std::mt19937& rng, int zero_pct) {
  DenseMatrix m(r, c);
  std::uniform_int_distribution<Coef> coef(1, p - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  for (auto& x : m.a) x = pct(rng) < zero_pct ? 0 : coef(rng);
  return m;
}

}  // namespace

TEST_CASE("serial and parallel RREF agree bit for bit") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 101u, 32749u}) {
    for (int trial = 0; trial < 6; ++trial) {
      Field k(p);
      auto m = random_matrix(40 + 7 * trial, 55, p, rng, 60);
      // duplicate rows force rank deficiency
      for (int j = 0; j < m.cols; ++j) m.at(1, j) = k.add(m.at(0, j), m.at(2, j));
      auto a = m, b = m;
      auto ia = rref_serial(k, a);
      auto ib = rref_parallel(k, b);
      CHECK(a == b);
      CHECK(ia.pivot_cols == ib.pivot_cols);
      CHECK(ia.rank < std::min(m.rows, m.cols) + 1);
    }
  }
}

TEST_CASE("nullspace vectors are annihilated and span the kernel") {
  std::mt19937 rng(5);
  Field k(101);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(12, 20, 101, rng, 70);
    auto ns = nullspace(k, m);
    auto prod = multiply(k, m, transpose(ns));
    for (auto x : prod.a) CHECK(x == 0);
    CHECK(ns.rows + rank(k, m) == m.cols);
    CHECK(rank(k, ns) == ns.rows);
  }
}

TEST_CASE("extension field elimination") {
  Field k(3, 2);
  DenseMatrix m(2, 2);
  m.at(0, 0) = 4;
  m.at(0, 1) = 5;
  m.at(1, 0) = k.mul(4, 7);
  m.at(1, 1) = k.mul(5, 7);
  CHECK(rank(k, m) == 1);
}

TEST_CASE("independent rows modulo a base") {
  Field k(5);
  DenseMatrix base(1, 3);
  base.at(0, 0) = 1;
  DenseMatrix cand(3, 3);
  cand.at(0, 0) = 2;  // in span of base
  cand.at(1, 1) = 1;
  cand.at(2, 0) = 1;
  cand.at(2, 1) = 3;  // dependent on base + row 1
  CHECK(independent_rows_modulo(k, base, cand) == std::vector<int>{1});
}

TEST_CASE("parallel map is order independent") {
  auto v = parallel_map<long long>(100, [](int i) { return static_cast<long long>(i) * i; });
  auto w = parallel_map<long long>(100, [](int i) { return static_cast<long long>(i) * i; }, false);
  CHECK(v == w);
  CHECK_THROWS(parallel_for(10, [](int i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
}
