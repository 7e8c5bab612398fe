#include "cisupport/resmod/constructions.hpp"

#include <stdexcept>

namespace cisupport {

GradedModule tensor_over_base(const GradedModule& M1, const GradedModule& M2, QuotientRingPtr target) {
  const PolyRing& Q = M1.ring().poly();
  if (Q.names() != M2.ring().poly().names() || Q.names() != target->poly().names())
    throw std::invalid_argument("tensor product needs one ambient ring");
  const PolyMatrix& A = M1.presentation();
  const PolyMatrix& B = M2.presentation();
  const int g1 = A.rows(), g2 = B.rows();
  std::vector<int> rows, cols;
  for (int i = 0; i < g1; ++i)
    for (int j = 0; j < g2; ++j) rows.push_back(A.row_degrees()[i] + B.row_degrees()[j]);
  for (int a = 0; a < A.cols(); ++a)
    for (int j = 0; j < g2; ++j) cols.push_back(A.col_degrees()[a] + B.row_degrees()[j]);
  for (int i = 0; i < g1; ++i)
    for (int b = 0; b < B.cols(); ++b) cols.push_back(A.row_degrees()[i] + B.col_degrees()[b]);
  PolyMatrix m(rows, cols);
  int c = 0;
  for (int a = 0; a < A.cols(); ++a)
    for (int j = 0; j < g2; ++j, ++c)
      for (int i = 0; i < g1; ++i) m.at(i * g2 + j, c) = A.at(i, a);
  for (int i = 0; i < g1; ++i)
    for (int b = 0; b < B.cols(); ++b, ++c)
      for (int j = 0; j < g2; ++j) m.at(i * g2 + j, c) = B.at(j, b);
  return GradedModule(std::move(target), std::move(m));
}

PolyMatrix multiplication_kernel(const GradedModule& M, const Poly& x) {
  const PolyRing& Q = M.ring().poly();
  const PolyMatrix& P = M.presentation();
  const int g = P.rows();
  std::vector<int> cd;
  for (int d : P.row_degrees()) cd.push_back(d + x.degree());
  PolyMatrix xm(P.row_degrees(), cd);
  for (int i = 0; i < g; ++i) xm.at(i, i) = x;
  // Pairs (u, v) with x u + P v = 0; the u parts are the kernel preimages.
  PolyMatrix syz = syzygies(Q, hconcat(xm, P), M.ring().gb());
  std::vector<int> top;
  for (int i = 0; i < g; ++i) top.push_back(i);
  PolyMatrix u = syz.select_rows(top);
  u.set_row_degrees(P.row_degrees());
  return u;
}

ElementQuotient quotient_by_element(const GradedModule& M, const Poly& x) {
  if (x.is_zero() || !x.is_homogeneous() || x.degree() < 1)
    throw std::invalid_argument("quotient element must be homogeneous of positive degree");
  const PolyRing& Q = M.ring().poly();
  const PolyMatrix& P = M.presentation();
  PolyMatrix u = multiplication_kernel(M, x);
  bool regular = columns_contained(Q, u, P, M.ring().gb());
  std::vector<int> cd;
  for (int d : P.row_degrees()) cd.push_back(d + x.degree());
  PolyMatrix xm(P.row_degrees(), cd);
  for (int i = 0; i < P.rows(); ++i) xm.at(i, i) = x;
  return {GradedModule(M.ring_ptr(), hconcat(P, xm)), regular};
}

SubmoduleSequence submodule_and_quotient(const GradedModule& M, const PolyMatrix& elements) {
  const PolyRing& Q = M.ring().poly();
  const PolyMatrix& P = M.presentation();
  if (elements.rows() != P.rows()) throw std::invalid_argument("elements must be given on the generators of M");
  PolyMatrix el = elements;
  el.set_row_degrees(P.row_degrees());
  if (!el.is_homogeneous()) throw std::invalid_argument("submodule generators must be homogeneous");
  // Drop zero columns: they generate nothing.
  std::vector<int> keep;
  for (int j = 0; j < el.cols(); ++j) {
    bool z = true;
    for (int i = 0; i < el.rows() && z; ++i) z = el.at(i, j).is_zero();
    if (!z) keep.push_back(j);
  }
  el = el.select_columns(keep);
  PolyMatrix syz = syzygies(Q, hconcat(el, P), M.ring().gb());
  std::vector<int> top;
  for (int j = 0; j < el.cols(); ++j) top.push_back(j);
  PolyMatrix rel = syz.select_rows(top);
  GradedModule S(M.ring_ptr(), rel);
  GradedModule quotient(M.ring_ptr(), hconcat(P, el));
  return {S, quotient, el};
}

GradedModule homology_module(QuotientRingPtr A, const PolyMatrix& a, const PolyMatrix& b) {
  const PolyRing& Q = A->poly();
  PolyMatrix Z;
  if (b.rows() == 0) {
    Z = identity_matrix(Q, b.col_degrees().empty() ? a.row_degrees() : b.col_degrees());
  } else {
    Z = syzygies(Q, b, A->gb());
  }
  if (Z.cols() == 0) return GradedModule(A, PolyMatrix(Z.col_degrees(), {}));
  if (a.rows() != Z.rows() && a.cols() > 0) throw std::invalid_argument("homology: maps do not compose");
  PolyMatrix syz = syzygies(Q, a.cols() > 0 ? hconcat(Z, a) : Z, A->gb());
  std::vector<int> top;
  for (int j = 0; j < Z.cols(); ++j) top.push_back(j);
  PolyMatrix rel = syz.select_rows(top);
  rel.set_row_degrees(Z.col_degrees());
  return GradedModule(std::move(A), std::move(rel));
}

GradedModule dual_ext(const GradedModule& M, int m) {
  if (m < 0) throw std::invalid_argument("Ext index must be non-negative");
  FreeResolution F = minimal_resolution(M, m + 1);
  // Hom(F_{m-1}, A) -> Hom(F_m, A) -> Hom(F_{m+1}, A).
  std::vector<int> fm;
  for (int d : F.degrees(m)) fm.push_back(-d);
  PolyMatrix in = m >= 1 && F.rank(m - 1) > 0 ? F.differential(m).transpose() : PolyMatrix(fm, {});
  PolyMatrix out = F.rank(m + 1) > 0 ? F.differential(m + 1).transpose() : PolyMatrix({}, fm);
  return homology_module(M.ring_ptr(), in, out);
}

bool hilbert_additive(const GradedModule& S, const GradedModule& M, const GradedModule& Q, int from, int to) {
  auto hs = S.hilbert_function(from, to);
  auto hm = M.hilbert_function(from, to);
  auto hq = Q.hilbert_function(from, to);
  for (std::size_t t = 0; t < hm.size(); ++t)
    if (hs[t] + hq[t] != hm[t]) return false;
  return true;
}

}  // namespace cisupport
