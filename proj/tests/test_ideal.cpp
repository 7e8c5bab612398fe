#include <doctest.h>

#include <functional>
#include <random>

#include "cisupport/exactalg/ideal.hpp"
#include "cisupport/exactalg/poly_matrix.hpp"
#include "cisupport/kernels/dense_modp.hpp"
#include "support.hpp"

using namespace cisupport;
using namespace cisupport::testing;

TEST_CASE("member witness follows the division trace") {
  auto R = make_ring(101, {"x", "y"});
  auto gens = Ps(R, {"x^2", "y^2"});
  auto w = member_witness(*R, P(R, "x^2*y^2"), gens);
  REQUIRE(w);
  CHECK(S(R, (*w)[0]) == "y^2");
  CHECK((*w)[1].is_zero());
  auto w2 = member_witness(*R, P(R, "x^2"), gens);
  REQUIRE(w2);
  CHECK(S(R, (*w2)[0]) == "1");
  CHECK((*w2)[1].is_zero());
  CHECK_FALSE(member_witness(*R, P(R, "x"), gens));
}

TEST_CASE("witness identity on random members, both divisor strategies") {
  auto R = make_ring(101, {"x", "y", "z"});
  auto gens = Ps(R, {"x^2 + y*z", "y^2 - x*z", "z^2"});
  std::mt19937 rng(3);
  std::uniform_int_distribution<Coef> coef(0, 100);
  const std::vector<std::string> mons{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  for (auto choice : {DivisorChoice::First, DivisorChoice::Last}) {
    WitnessBasis wb(*R, gens, choice);
    for (int t = 0; t < 30; ++t) {
      Poly f;
      for (const auto& g : gens) {
        Poly c;
        for (const auto& m : mons) c = R->add(c, R->scale(P(R, m), coef(rng)));
        f = R->add(f, R->mul(c, g));
      }
      auto w = wb.witness(f);
      REQUIRE(w);
      Poly acc = f;
      for (std::size_t i = 0; i < gens.size(); ++i) acc = R->sub(acc, R->mul((*w)[i], gens[i]));
      CHECK(acc.is_zero());
    }
    CHECK_FALSE(wb.witness(P(R, "x*y")));
  }
}

TEST_CASE("radical membership") {
  auto R = make_ring(101, {"x", "y"});
  CHECK(radical_member(*R, P(R, "x*y"), Ps(R, {"x^2", "y^2"})));
  CHECK_FALSE(radical_member(*R, P(R, "x + 1"), Ps(R, {"x^2"})));
  CHECK(radical_member(*R, P(R, "x"), Ps(R, {"x"})));
  CHECK_FALSE(radical_member(*R, P(R, "y"), Ps(R, {"x^3"})));
  CHECK(radical_member(*R, P(R, "x + y"), Ps(R, {"x^3", "y^5"})));
}

TEST_CASE("krull dimension examples") {
  auto C2 = make_ring(101, {"chi1", "chi2"});
  CHECK(krull_dimension(*C2, Ps(C2, {"chi2"})) == 1);
  CHECK(krull_dimension(*C2, Ps(C2, {"chi1", "chi2"})) == 0);
  auto C3 = make_ring(101, {"chi1", "chi2", "chi3"});
  CHECK(krull_dimension(*C3, Ps(C3, {"chi1*chi2 - chi3^2"})) == 3 - 1);
  CHECK(krull_dimension(*C3, {}) == 3);
  CHECK(krull_dimension(*C3, Ps(C3, {"1"})) == -1);
}

namespace {

// Dimension of the degree-d part of k[vars]/I, counted by linear algebra on
// the span of monomial multiples of the generators (independent of Groebner).
int graded_piece(const PolyRing& R, const std::vector<Poly>& gens, int d) {
  std::vector<Monomial> mons;
  std::vector<int> e(R.nvars(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == R.nvars() - 1) {
      e[i] = left;
      mons.push_back(R.monomial(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, d);
  auto index = [&](const Monomial& m) {
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mons[i] == m) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<Coef>> rows;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg > d) continue;
    std::vector<Monomial> mult;
    std::vector<int> e2(R.nvars(), 0);
    std::function<void(int, int)> rec2 = [&](int i, int left) {
      if (i == R.nvars() - 1) {
        e2[i] = left;
        mult.push_back(R.monomial(e2));
        return;
      }
      for (int a = left; a >= 0; --a) {
        e2[i] = a;
        rec2(i + 1, left - a);
      }
    };
    rec2(0, d - dg);
    for (const auto& u : mult) {
      std::vector<Coef> row(mons.size(), 0);
      for (const auto& t : g.terms()) row[index(mono_mul(t.m, u))] = t.c;
      rows.push_back(row);
    }
  }
  kernels::DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(mons.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return static_cast<int>(mons.size()) - kernels::rank(R.field(), m);
}

// Krull dimension = 1 + degree of the Hilbert polynomial, read off from finite
// differences of the Hilbert function (0 when it vanishes eventually).
int dimension_by_growth(const PolyRing& R, const std::vector<Poly>& gens, int top) {
  std::vector<long long> h;
  for (int d = 0; d <= top; ++d) h.push_back(graded_piece(R, gens, d));
  if (h.back() == 0) return 0;
  int order = 0;
  while (true) {
    bool constant = true;
    for (std::size_t i = h.size() - 4; i + 1 < h.size(); ++i)
      if (h[i] != h[i + 1]) constant = false;
    if (constant) return order + 1;
    std::vector<long long> diff;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) diff.push_back(h[i + 1] - h[i]);
    h = diff;
    ++order;
  }
}

}  // namespace

TEST_CASE("krull dimension agrees with Hilbert function growth") {
  auto R = make_ring(101, {"x", "y", "z"});
  const std::vector<std::vector<std::string>> ideals{
      {"x^2", "y^2", "z^2"}, {"x^2", "y^2"}, {"x^2"}, {"x*y", "x*z"}, {"x*y - z^2"}, {"x^2 - y*z", "y^2 - x*z"}};
  for (const auto& ss : ideals) {
    auto gens = Ps(R, ss);
    CHECK(krull_dimension(*R, gens) == dimension_by_growth(*R, gens, 12));
  }
}

TEST_CASE("monomial dimension matches a face count") {
  // supports {x0,x1}, {x2}: maximal independent sets {x0,x3},{x1,x3} -> 2
  Monomial a, b;
  a.exp[0] = 1;
  a.exp[1] = 1;
  a.refresh_mask();
  b.exp[2] = 2;
  b.refresh_mask();
  CHECK(monomial_krull_dimension(4, {a, b}) == 2);
  CHECK(monomial_krull_dimension(4, {}) == 4);
}

TEST_CASE("regular sequence detection") {
  auto R = make_ring(101, {"x", "y", "z"});
  auto rep = check_regular_sequence(*R, Ps(R, {"x^2", "y^2", "z^2"}));
  CHECK(rep.regular);
  CHECK(rep.length == 3);
  CHECK(rep.minimal_generators);
  auto R2 = make_ring(101, {"x", "y"});
  CHECK_FALSE(is_regular_sequence(*R2, Ps(R2, {"x", "x*y"})));
  CHECK_FALSE(is_regular_sequence(*R2, Ps(R2, {"x^2", "x*y"})));
  auto R1 = make_ring(101, {"x"});
  CHECK(is_regular_sequence(*R1, Ps(R1, {"x^2"})));
  CHECK_THROWS(check_regular_sequence(*R2, Ps(R2, {"x^2 + y"})));
}

namespace {

// Brute-force kernel dimension of the degree-d part of a map A^s -> A^r over
// an artinian monomial quotient A, using the standard monomial basis.
struct ArtinianOracle {
  const PolyRing& R;
  std::vector<Poly> gb;
  std::vector<Monomial> basis_in_degree(int d) const {
    std::vector<Monomial> out;
    std::vector<int> e(R.nvars(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == R.nvars() - 1) {
        e[i] = left;
        Monomial m = R.monomial(e);
        bool standard = true;
        for (const auto& g : gb)
          if (divides(g.lead().m, m)) standard = false;
        if (standard) out.push_back(m);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = a;
        rec(i + 1, left - a);
      }
    };
    if (d >= 0) rec(0, d);
    return out;
  }
  // Matrix of the map restricted to source degree t, in coordinates.
  kernels::DenseMatrix map_in_degree(const PolyMatrix& m, int t) const {
    std::vector<std::pair<int, Monomial>> src, dst;
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& u : basis_in_degree(t - m.col_degrees()[j])) src.push_back({j, u});
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& u : basis_in_degree(t - m.row_degrees()[i])) dst.push_back({i, u});
    kernels::DenseMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t s = 0; s < src.size(); ++s) {
      auto [j, u] = src[s];
      for (int i = 0; i < m.rows(); ++i) {
        Poly img = reduce_poly(R, gb, R.mul_term(m.at(i, j), 1, u));
        for (const auto& term : img.terms())
          for (std::size_t d = 0; d < dst.size(); ++d)
            if (dst[d].first == i && dst[d].second == term.m) out.at(static_cast<int>(d), static_cast<int>(s)) = term.c;
      }
    }
    return out;
  }
  int kernel_dim(const PolyMatrix& m, int t) const {
    auto a = map_in_degree(m, t);
    return a.cols - kernels::rank(R.field(), a);
  }
  // Dimension of the degree-t part of the column span of `gens` (a map into
  // the source of m, so rows match m's columns).
  int span_dim(const PolyMatrix& gens, int t) const {
    auto a = map_in_degree(gens, t);
    return kernels::rank(R.field(), a);
  }
};

}  // namespace

TEST_CASE("syzygy examples") {
  auto Q = make_ring(101, {"x", "y"});
  PolyMatrix m({0}, {1, 1});
  m.at(0, 0) = P(Q, "x");
  m.at(0, 1) = P(Q, "y");
  auto s = syzygies(*Q, m);
  REQUIRE(s.cols() == 1);
  CHECK(S(Q, s.at(0, 0)) == "-y");
  CHECK(S(Q, s.at(1, 0)) == "x");

  auto Q1 = make_ring(101, {"x"});
  PolyMatrix m1({0}, {1});
  m1.at(0, 0) = P(Q1, "x");
  CHECK(syzygies(*Q1, m1).cols() == 0);

  auto gb = buchberger(*Q, Ps(Q, {"x^2", "y^2"}));
  auto sr = syzygies(*Q, m, gb);
  CHECK(sr.cols() == 3);
  CHECK(multiply(*Q, m, sr).rows() == 1);
  auto prod = reduce_entries(*Q, multiply(*Q, m, sr), gb);
  CHECK(prod.is_zero());
  ArtinianOracle oracle{*Q, gb};
  for (int t = 0; t <= 5; ++t) CHECK(oracle.kernel_dim(m, t) == oracle.span_dim(sr, t));
}

TEST_CASE("syzygy soundness and completeness over artinian quotients") {
  auto Q = make_ring(101, {"x", "y", "z"});
  auto gb = buchberger(*Q, Ps(Q, {"x^2", "y^2", "z^2"}));
  ArtinianOracle oracle{*Q, gb};
  std::vector<PolyMatrix> maps;
  {
    PolyMatrix m({0}, {1, 1, 1});
    m.at(0, 0) = P(Q, "x");
    m.at(0, 1) = P(Q, "y");
    m.at(0, 2) = P(Q, "z");
    maps.push_back(m);
  }
  {
    PolyMatrix m({0, 0}, {1, 1, 2});
    m.at(0, 0) = P(Q, "x");
    m.at(1, 0) = P(Q, "y");
    m.at(0, 1) = P(Q, "z");
    m.at(1, 2) = P(Q, "x*y + y*z");
    m.at(0, 2) = P(Q, "x*z");
    maps.push_back(m);
  }
  for (const auto& m : maps) {
    auto s = syzygies(*Q, m, gb);
    CHECK(s.is_homogeneous());
    CHECK(reduce_entries(*Q, multiply(*Q, m, s), gb).is_zero());
    for (int t = 0; t <= 6; ++t) CHECK(oracle.kernel_dim(m, t) == oracle.span_dim(s, t));
  }
}
