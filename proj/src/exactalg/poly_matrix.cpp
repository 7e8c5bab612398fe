#include "cisupport/exactalg/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "cisupport/exactalg/groebner.hpp"

namespace cisupport {

PolyMatrix PolyMatrix::zeros(int rows, int cols) {
  return PolyMatrix(std::vector<int>(static_cast<std::size_t>(rows), 0), std::vector<int>(static_cast<std::size_t>(cols), 0));
}

PolyMatrix::PolyMatrix(std::vector<int> row_deg, std::vector<int> col_deg)
    : row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)), cells_(row_deg_.size() * col_deg_.size()) {}

void PolyMatrix::set_row_degrees(std::vector<int> d) {
  if (d.size() != row_deg_.size()) throw std::invalid_argument("row degree count mismatch");
  row_deg_ = std::move(d);
}

void PolyMatrix::set_col_degrees(std::vector<int> d) {
  if (d.size() != col_deg_.size()) throw std::invalid_argument("column degree count mismatch");
  col_deg_ = std::move(d);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_homogeneous() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Poly& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != col_deg_[j] - row_deg_[i]) return false;
    }
  return true;
}

Vec PolyMatrix::column_vec(const Field& k, const ModuleOrder& ord, int j) const {
  std::vector<VTerm> terms;
  for (int i = 0; i < rows(); ++i)
    for (const auto& t : at(i, j).terms()) terms.push_back(VTerm{t.c, static_cast<std::uint32_t>(i), t.m});
  return vec::normalize(k, ord, std::move(terms));
}

void PolyMatrix::append_column(const Vec& v, int degree) {
  std::vector<Poly> col(row_deg_.size());
  for (int i = 0; i < rows(); ++i) col[i] = vec::component(v, static_cast<std::uint32_t>(i));
  std::vector<Poly> cells;
  cells.reserve(cells_.size() + row_deg_.size());
  const int c = cols();
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < c; ++j) cells.push_back(std::move(cells_[static_cast<std::size_t>(i) * c + j]));
    cells.push_back(std::move(col[i]));
  }
  cells_ = std::move(cells);
  col_deg_.push_back(degree);
}

std::vector<Poly> PolyMatrix::column(int j) const {
  std::vector<Poly> out;
  for (int i = 0; i < rows(); ++i) out.push_back(at(i, j));
  return out;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& js) const {
  std::vector<int> cd;
  for (int j : js) cd.push_back(col_deg_[j]);
  PolyMatrix out(row_deg_, cd);
  for (int i = 0; i < rows(); ++i)
    for (std::size_t t = 0; t < js.size(); ++t) out.at(i, static_cast<int>(t)) = at(i, js[t]);
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& is) const {
  std::vector<int> rd;
  for (int i : is) rd.push_back(row_deg_[i]);
  PolyMatrix out(rd, col_deg_);
  for (std::size_t t = 0; t < is.size(); ++t)
    for (int j = 0; j < cols(); ++j) out.at(static_cast<int>(t), j) = at(is[t], j);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  std::vector<int> rd, cd;
  for (int d : col_deg_) rd.push_back(-d);
  for (int d : row_deg_) cd.push_back(-d);
  PolyMatrix out(rd, cd);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix multiply(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  PolyMatrix out(a.row_degrees(), b.col_degrees());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Poly& y = b.at(k, j);
        if (y.is_zero()) continue;
        out.at(i, j) = ring.add(out.at(i, j), ring.mul(x, y));
      }
    }
  return out;
}

PolyMatrix reduce_entries(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& gb) {
  PolyMatrix out = m;
  if (gb.empty()) return out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = reduce_poly(ring, gb, m.at(i, j));
  return out;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  std::vector<int> cd = a.col_degrees();
  cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  PolyMatrix out(a.row_degrees(), cd);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  std::vector<int> rd = a.row_degrees(), cd = a.col_degrees();
  rd.insert(rd.end(), b.row_degrees().begin(), b.row_degrees().end());
  cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  PolyMatrix out(rd, cd);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

PolyMatrix identity_matrix(const PolyRing& ring, const std::vector<int>& degrees) {
  PolyMatrix out(degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) out.at(static_cast<int>(i), static_cast<int>(i)) = ring.one();
  return out;
}

namespace {

void add_quotient_multiples(GroebnerEngine& eng, const std::vector<Poly>& quotient, int first, int count) {
  for (int k = 0; k < count; ++k)
    for (const auto& g : quotient) eng.add_background(vec::from_poly(g, static_cast<std::uint32_t>(first + k)));
}

}  // namespace

PolyMatrix syzygies(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& quotient) {
  const int r = m.rows(), s = m.cols();
  const Field& k = ring.field();
  PolyMatrix out(m.col_degrees(), {});
  if (s == 0) return out;

  ModuleOrder elim;
  for (int i = 0; i < r; ++i) {
    elim.twist.push_back(m.row_degrees()[i]);
    elim.block.push_back(1);
  }
  for (int j = 0; j < s; ++j) {
    elim.twist.push_back(m.col_degrees()[j]);
    elim.block.push_back(0);
  }
  GroebnerEngine eng(ring, elim);
  add_quotient_multiples(eng, quotient, 0, r);
  for (int j = 0; j < s; ++j) {
    std::vector<VTerm> terms;
    for (int i = 0; i < r; ++i)
      for (const auto& t : m.at(i, j).terms()) terms.push_back(VTerm{t.c, static_cast<std::uint32_t>(i), t.m});
    terms.push_back(VTerm{1, static_cast<std::uint32_t>(r + j), Monomial{}});
    eng.add_background(vec::normalize(k, elim, std::move(terms)));
  }
  add_quotient_multiples(eng, quotient, r, s);
  eng.run();
  auto kernel = eng.elements_in_block(0);

  // Minimal generators of the kernel modulo quotient multiples.
  ModuleOrder ord = ModuleOrder::graded(m.col_degrees());
  GroebnerEngine mg(ring, ord);
  add_quotient_multiples(mg, quotient, 0, s);
  std::vector<Vec> cand;
  for (auto& v : kernel) {
    for (auto& t : v) t.comp -= static_cast<std::uint32_t>(r);
    cand.push_back(vec::normalize(k, ord, std::move(v)));
  }
  std::stable_sort(cand.begin(), cand.end(), [&](const Vec& a, const Vec& b) { return ord.cmp(a.front(), b.front()) < 0; });
  for (auto& v : cand) mg.add_generator(v);
  mg.run();
  for (int idx : mg.minimal_generators()) {
    Vec v = cand[idx];
    int deg = ord.degree(v.front());
    out.append_column(v, deg);
  }
  return reduce_entries(ring, out, quotient);
}

std::vector<int> minimal_columns(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& quotient) {
  ModuleOrder ord = m.row_order();
  GroebnerEngine mg(ring, ord);
  add_quotient_multiples(mg, quotient, 0, m.rows());
  for (int j = 0; j < m.cols(); ++j) mg.add_generator(m.column_vec(ring.field(), ord, j));
  mg.run();
  return mg.minimal_generators();
}

bool columns_contained(const PolyRing& ring, const PolyMatrix& b, const PolyMatrix& a, const std::vector<Poly>& quotient) {
  if (a.rows() != b.rows()) throw std::invalid_argument("containment: row count mismatch");
  ModuleOrder ord = a.row_order();
  GroebnerEngine eng(ring, ord);
  add_quotient_multiples(eng, quotient, 0, a.rows());
  for (int j = 0; j < a.cols(); ++j) eng.add_background(a.column_vec(ring.field(), ord, j));
  eng.run();
  for (int j = 0; j < b.cols(); ++j)
    if (!eng.reduces_to_zero(b.column_vec(ring.field(), ord, j))) return false;
  return true;
}

}  // namespace cisupport
