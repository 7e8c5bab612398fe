#include "cisupport/realize/realize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cisupport {

namespace {

PolyMatrix negated(const PolyRing& Q, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Q.neg(m.at(i, j));
  return out;
}

std::vector<int> shifted(const std::vector<int>& d, int s) {
  std::vector<int> out;
  for (int v : d) out.push_back(v + s);
  return out;
}

int internal_degree(const CIRing& ci, const Poly& p) {
  const auto& t = p.lead();
  int s = 0;
  for (int i = 0; i < ci.codim(); ++i) s += t.m.exp[i] * ci.fs()[i].degree();
  return s;
}

}  // namespace

std::pair<int, int> hilbert_window(const GradedModule& M, int extra) {
  if (M.num_generators() == 0) return {0, 0};
  const auto& d = M.degrees();
  int lo = *std::min_element(d.begin(), d.end());
  int hi = *std::max_element(d.begin(), d.end());
  if (M.ring().artinian()) return {lo, hi + M.ring().top_degree()};
  return {lo, hi + extra};
}

MappingCone mapping_cone_module(const CIRing& ci, const GradedModule& M, const Poly& p) {
  if (p.is_zero() || !p.is_homogeneous() || p.degree() < 1)
    throw std::invalid_argument("mapping cone needs a homogeneous chi form of positive degree");
  const PolyRing& Q = ci.poly();
  const int d = p.degree();
  const int e = 2 * d;
  FreeResolution F = minimal_resolution(M, e);
  OperatorFamily ops = operator_family(Q, lift_to_ambient(F), ci.fs());
  auto P = evaluate_chi_class(ci, p, F, ops);
  const int shift = internal_degree(ci, p);

  const PolyMatrix& de = F.differential(e);
  const PolyMatrix& d1 = F.differential(1);
  const int r1 = F.rank(e - 1), r0 = F.rank(0), c1 = F.rank(e), c0 = F.rank(1);
  std::vector<int> rows = F.degrees(e - 1), cols = F.degrees(e);
  auto f0 = shifted(F.degrees(0), shift);
  auto f1 = shifted(F.degrees(1), shift);
  rows.insert(rows.end(), f0.begin(), f0.end());
  cols.insert(cols.end(), f1.begin(), f1.end());
  PolyMatrix raw(rows, cols);
  PolyMatrix nde = negated(Q, de);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < c1; ++j) raw.at(i, j) = nde.at(i, j);
  for (int i = 0; i < r0; ++i) {
    for (int j = 0; j < c1; ++j) raw.at(r1 + i, j) = P[e].at(i, j);
    for (int j = 0; j < c0; ++j) raw.at(r1 + i, c1 + j) = d1.at(i, j);
  }
  if (!raw.is_homogeneous()) throw std::logic_error("mapping cone presentation is not homogeneous");

  MappingCone out;
  out.raw = raw;
  out.chain_component = P[e];
  out.cohomological_degree = e;
  out.internal_shift = shift;
  out.module = GradedModule(M.ring_ptr(), raw).minimize();
  PolyMatrix sub_pres = d1;
  sub_pres.set_row_degrees(f0);
  sub_pres.set_col_degrees(f1);
  out.sub = GradedModule(M.ring_ptr(), sub_pres);
  out.quotient = GradedModule(M.ring_ptr(), de);
  GradedModule whole(M.ring_ptr(), raw);
  auto [lo, hi] = hilbert_window(whole);
  out.sequence_exact = hilbert_additive(out.sub, whole, out.quotient, lo, hi);
  return out;
}

GradedModule realize_cone(const CIRing& ci, const std::vector<Poly>& polys) {
  GradedModule M = GradedModule::residue_field(ci.ring());
  for (const auto& p : polys) M = mapping_cone_module(ci, M, p).module;
  return M;
}

namespace {

// Candidate regular elements of degree deg: seeded random combinations of
// the degree-deg monomials, then (for small spaces) all of them.
std::vector<Poly> candidates(const QuotientRing& A, int deg, std::mt19937_64& rng) {
  const PolyRing& Q = A.poly();
  const Field& k = Q.field();
  std::vector<Monomial> mons;
  {
    QuotientRing full(A.poly_ptr(), {});
    mons = full.standard_monomials(deg);
  }
  std::vector<Poly> out;
  std::uniform_int_distribution<Coef> coef(0, k.size() - 1);
  for (int t = 0; t < 16; ++t) {
    std::vector<Term> terms;
    for (const auto& m : mons) terms.push_back(Term{coef(rng), m});
    Poly f = Q.normalize(std::move(terms));
    if (!f.is_zero()) out.push_back(f);
  }
  long double space = 1;
  for (std::size_t i = 0; i < mons.size(); ++i) space *= k.size();
  if (space <= 4096) {
    std::vector<Coef> c(mons.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == k.size()) c[i++] = 0;
      if (i == c.size()) break;
      std::vector<Term> terms;
      for (std::size_t j = 0; j < mons.size(); ++j) terms.push_back(Term{c[j], mons[j]});
      out.push_back(Q.normalize(std::move(terms)));
    }
  }
  return out;
}

// Regular sequence of the given length on N, or the longest prefix found.
std::vector<Poly> find_regular_sequence(const GradedModule& N, int length, std::uint64_t seed, GradedModule& quotient) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> seq;
  quotient = N;
  for (int j = 0; j < length; ++j) {
    bool found = false;
    for (int deg = 1; deg <= 2 && !found; ++deg)
      for (const auto& x : candidates(quotient.ring(), deg, rng)) {
        auto q = quotient_by_element(quotient, x);
        if (!q.regular) continue;
        quotient = q.module.minimize();
        seq.push_back(x);
        found = true;
        break;
      }
    if (!found) break;
  }
  return seq;
}

}  // namespace

FiniteLengthForm finite_length_form(const CIRing& ci, const GradedModule& M, std::uint64_t seed) {
  FiniteLengthForm out;
  const int dim = ci.ring()->dim();
  if (dim == 0 || M.krull_dim() <= 0) {
    out.module = M;
    out.complete = true;
    return out;
  }
  FreeResolution F = minimal_resolution(M, dim + 1);
  for (int t = 0; t <= dim; ++t) {
    GradedModule N = syzygy_module(F, M, t);
    if (N.num_generators() == 0) {
      out.module = N;
      out.syzygy = t;
      out.complete = true;
      return out;
    }
    GradedModule quotient;
    auto seq = find_regular_sequence(N, dim, seed, quotient);
    if (static_cast<int>(seq.size()) == dim || t == dim) {
      out.module = quotient;
      out.syzygy = t;
      out.regular_sequence = seq;
      out.complete = static_cast<int>(seq.size()) == dim && quotient.krull_dim() <= 0;
      return out;
    }
  }
  return out;
}

}  // namespace cisupport
