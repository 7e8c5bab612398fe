#include "cisupport/resmod/ext.hpp"

#include <stdexcept>

namespace cisupport {

bool is_residue_field(const GradedModule& N) {
  GradedModule m = N.minimize();
  if (m.num_generators() != 1) return false;
  return m.krull_dim() == 0 && m.length() == 1;
}

PolyMatrix hom_into(const PolyMatrix& d, const std::vector<int>& n_degrees) {
  const int g = static_cast<int>(n_degrees.size());
  std::vector<int> rows, cols;
  for (int b : d.col_degrees())
    for (int l : n_degrees) rows.push_back(l - b);
  for (int a : d.row_degrees())
    for (int l : n_degrees) cols.push_back(l - a);
  PolyMatrix out(rows, cols);
  for (int j = 0; j < d.rows(); ++j)
    for (int k = 0; k < d.cols(); ++k) {
      if (d.at(j, k).is_zero()) continue;
      for (int l = 0; l < g; ++l) out.at(k * g + l, j * g + l) = d.at(j, k);
    }
  return out;
}

PolyMatrix hom_relations(const std::vector<int>& basis, const PolyMatrix& n_presentation) {
  const int g = n_presentation.rows(), h = n_presentation.cols();
  std::vector<int> rows, cols;
  for (int a : basis) {
    for (int l : n_presentation.row_degrees()) rows.push_back(l - a);
    for (int m : n_presentation.col_degrees()) cols.push_back(m - a);
  }
  PolyMatrix out(rows, cols);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int l = 0; l < g; ++l)
      for (int m = 0; m < h; ++m) out.at(static_cast<int>(j) * g + l, static_cast<int>(j) * h + m) = n_presentation.at(l, m);
  return out;
}

bool ext_vanishes(const FreeResolution& F, const GradedModule& N, int i) {
  if (i < 0) throw std::invalid_argument("Ext index must be non-negative");
  if (F.length < i + 1 && !(F.finite && F.length >= i)) throw std::invalid_argument("resolution too short for Ext");
  if (i <= F.length && F.rank(i) == 0) return true;
  if (N.num_generators() == 0) return true;
  if (is_residue_field(N)) return F.rank(i) == 0;

  const QuotientRing& A = *F.ring;
  const PolyRing& Q = A.poly();
  const PolyMatrix& phi = N.presentation();
  const auto& ndeg = phi.row_degrees();
  const auto& a = F.degrees(i);

  // Cycles: x in N^{b_i} with Hom(d_{i+1}, N) x = 0 in N^{b_{i+1}}.
  PolyMatrix cycles;
  const bool has_next = i + 1 <= F.length && F.rank(i + 1) > 0;
  if (!has_next) {
    std::vector<int> cover;
    for (int aj : a)
      for (int l : ndeg) cover.push_back(l - aj);
    cycles = identity_matrix(Q, cover);
  } else {
    const PolyMatrix& dn = F.differential(i + 1);
    PolyMatrix D = hom_into(dn, ndeg);
    PolyMatrix rel = hom_relations(dn.col_degrees(), phi);
    PolyMatrix syz = syzygies(Q, hconcat(D, rel), A.gb());
    std::vector<int> top;
    for (int r = 0; r < D.cols(); ++r) top.push_back(r);
    cycles = syz.select_rows(top);
  }

  PolyMatrix boundaries = hom_relations(a, phi);
  if (i >= 1 && F.rank(i - 1) > 0) boundaries = hconcat(hom_into(F.differential(i), ndeg), boundaries);
  return columns_contained(Q, cycles, boundaries, A.gb());
}

bool ext_vanishes(const GradedModule& M, const GradedModule& N, int i) {
  if (M.ring().canonical() != N.ring().canonical()) throw std::invalid_argument("Ext needs modules over one ring");
  return ext_vanishes(minimal_resolution(M, i + 1), N, i);
}

}  // namespace cisupport
