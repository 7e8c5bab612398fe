#pragma once

#include <cstdint>
#include <vector>

#include "cisupport/exactalg/field.hpp"

namespace cisupport::kernels {

/// Row-major dense matrix over a finite field.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coef> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Coef& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Coef at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  Coef* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const Coef* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form in place. Pivot rule: leftmost column first, the
/// topmost remaining row with a nonzero entry; pivot rows are scaled to 1.
RrefInfo rref_serial(const Field& k, DenseMatrix& m);

/// Same result as rref_serial, with the elimination of each pivot column
/// spread over OpenMP threads.
RrefInfo rref_parallel(const Field& k, DenseMatrix& m);

/// Uses the parallel kernel when the matrix is large enough to benefit.
RrefInfo rref(const Field& k, DenseMatrix& m);

int rank(const Field& k, DenseMatrix m);

/// Basis of {v : m v = 0}, one basis vector per row of the result, in the
/// canonical form read off the RREF (free variables set to unit vectors).
DenseMatrix nullspace(const Field& k, DenseMatrix m);

DenseMatrix multiply(const Field& k, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix identity(int n);

/// Row space basis (the nonzero rows of the RREF).
DenseMatrix row_basis(const Field& k, DenseMatrix m);

/// Rows of `cand` (in order) that are not in the span of `base` plus the
/// previously accepted candidates.
std::vector<int> independent_rows_modulo(const Field& k, const DenseMatrix& base, const DenseMatrix& cand);

}  // namespace cisupport::kernels
