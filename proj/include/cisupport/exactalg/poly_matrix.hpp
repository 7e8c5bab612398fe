#pragma once

#include <vector>

#include "cisupport/exactalg/module_vec.hpp"

namespace cisupport {

/// Dense matrix of polynomials describing a graded map F -> G: column j is the
/// image of a basis element of degree col_deg[j], row i a basis element of
/// degree row_deg[i]. Homogeneity means entry (i,j) is zero or homogeneous of
/// degree col_deg[j] - row_deg[i]. Empty matrices keep their shape.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// rows x cols with all twists zero.
  static PolyMatrix zeros(int rows, int cols);
  PolyMatrix(std::vector<int> row_deg, std::vector<int> col_deg);

  int rows() const { return static_cast<int>(row_deg_.size()); }
  int cols() const { return static_cast<int>(col_deg_.size()); }

  Poly& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * cols() + j]; }
  const Poly& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * cols() + j]; }

  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  void set_row_degrees(std::vector<int> d);
  void set_col_degrees(std::vector<int> d);

  bool is_zero() const;
  /// Entries homogeneous of the degree the twists demand.
  bool is_homogeneous() const;

  /// Column j as a free-module vector under `ord` (components = rows).
  Vec column_vec(const Field& k, const ModuleOrder& ord, int j) const;
  /// Appends a column given as a module vector.
  void append_column(const Vec& v, int degree);
  std::vector<Poly> column(int j) const;
  PolyMatrix select_columns(const std::vector<int>& js) const;
  PolyMatrix select_rows(const std::vector<int>& is) const;
  PolyMatrix transpose() const;

  ModuleOrder row_order() const { return ModuleOrder::graded(row_deg_); }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.row_deg_ == b.row_deg_ && a.col_deg_ == b.col_deg_ && a.cells_ == b.cells_;
  }

 private:
  std::vector<int> row_deg_;
  std::vector<int> col_deg_;
  std::vector<Poly> cells_;
};

PolyMatrix multiply(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b);
/// Entry-wise normal form modulo a reduced basis.
PolyMatrix reduce_entries(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& gb);
/// [a | b] side by side; row degrees taken from a.
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
/// Block diagonal a (+) b.
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(const PolyRing& ring, const std::vector<int>& degrees);

/// Columns generating the kernel of the map given by m over A = ring/(quotient),
/// where `quotient` is a reduced Groebner basis (empty for A = ring). The
/// returned columns minimally generate the kernel, with entries in normal form.
PolyMatrix syzygies(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& quotient = {});

/// Indices of columns of m that minimally generate the column span modulo
/// quotient * (row space), processed in column order.
std::vector<int> minimal_columns(const PolyRing& ring, const PolyMatrix& m, const std::vector<Poly>& quotient = {});

/// True when every column of `b` lies in the span of the columns of `a`
/// plus quotient multiples of the row basis.
bool columns_contained(const PolyRing& ring, const PolyMatrix& b, const PolyMatrix& a,
                       const std::vector<Poly>& quotient = {});

}  // namespace cisupport
