#include "cisupport/kernels/dense_modp.hpp"

#include <stdexcept>

#include "cisupport/kernels/parallel.hpp"

namespace cisupport::kernels {

namespace {

// dst[c0..cols) -= f * src[c0..cols)
inline void axpy(const Field& k, Coef* dst, const Coef* src, Coef f, int c0, int cols) {
  if (f == 0) return;
  if (k.is_prime_field()) {
    const std::uint64_t p = k.characteristic();
    const std::uint64_t nf = p - f;
    for (int j = c0; j < cols; ++j) {
      if (!src[j]) continue;
      dst[j] = static_cast<Coef>((dst[j] + nf * src[j]) % p);
    }
  } else {
    for (int j = c0; j < cols; ++j)
      if (src[j]) dst[j] = k.sub(dst[j], k.mul(f, src[j]));
  }
}

inline void scale_row(const Field& k, Coef* r, Coef f, int c0, int cols) {
  for (int j = c0; j < cols; ++j) r[j] = k.mul(r[j], f);
}

// Shared driver; `parallel` only changes how rows are distributed.
RrefInfo rref_impl(const Field& k, DenseMatrix& m, bool parallel) {
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    scale_row(k, m.row(r), k.inv(m.at(r, c)), c, m.cols);
    const Coef* prow = m.row(r);
    const int pr = r;
    const int rows = m.rows, cols = m.cols;
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < rows; ++i) {
        if (i == pr) continue;
        Coef* row = m.row(i);
        axpy(k, row, prow, row[c], c, cols);
      }
    } else {
      for (int i = 0; i < rows; ++i) {
        if (i == pr) continue;
        Coef* row = m.row(i);
        axpy(k, row, prow, row[c], c, cols);
      }
    }
    info.pivot_cols.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

}  // namespace

RrefInfo rref_serial(const Field& k, DenseMatrix& m) { return rref_impl(k, m, false); }

RrefInfo rref_parallel(const Field& k, DenseMatrix& m) { return rref_impl(k, m, true); }

RrefInfo rref(const Field& k, DenseMatrix& m) {
  const bool big = static_cast<long long>(m.rows) * m.cols >= 64 * 64 && thread_count() > 1;
  return rref_impl(k, m, big);
}

int rank(const Field& k, DenseMatrix m) { return rref(k, m).rank; }

DenseMatrix nullspace(const Field& k, DenseMatrix m) {
  RrefInfo info = rref(k, m);
  std::vector<int> pivot_of_col(static_cast<std::size_t>(m.cols), -1);
  for (int i = 0; i < info.rank; ++i) pivot_of_col[info.pivot_cols[i]] = i;
  DenseMatrix out(m.cols - info.rank, m.cols);
  int t = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    out.at(t, f) = 1;
    for (int i = 0; i < info.rank; ++i) out.at(t, info.pivot_cols[i]) = k.neg(m.at(i, f));
    ++t;
  }
  return out;
}

DenseMatrix multiply(const Field& k, const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("dense multiply: shape mismatch");
  DenseMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      Coef x = a.at(i, l);
      if (!x) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(l, j)) out.at(i, j) = k.add(out.at(i, j), k.mul(x, b.at(l, j)));
    }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

DenseMatrix identity(int n) {
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

DenseMatrix row_basis(const Field& k, DenseMatrix m) {
  RrefInfo info = rref(k, m);
  DenseMatrix out(info.rank, m.cols);
  for (int i = 0; i < info.rank; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::vector<int> independent_rows_modulo(const Field& k, const DenseMatrix& base, const DenseMatrix& cand) {
  if (base.rows && base.cols != cand.cols) throw std::invalid_argument("independent_rows_modulo: width mismatch");
  const int n = cand.cols;
  // Incremental echelon basis: rows kept reduced against each other's pivots.
  std::vector<std::vector<Coef>> ech;
  std::vector<int> piv;
  auto reduce = [&](std::vector<Coef>& v) {
    for (std::size_t t = 0; t < ech.size(); ++t) {
      Coef f = v[piv[t]];
      if (f) axpy(k, v.data(), ech[t].data(), f, 0, n);
    }
  };
  auto push = [&](std::vector<Coef>& v) -> bool {
    reduce(v);
    int p = -1;
    for (int j = 0; j < n; ++j)
      if (v[j]) {
        p = j;
        break;
      }
    if (p < 0) return false;
    scale_row(k, v.data(), k.inv(v[p]), 0, n);
    for (auto& e : ech) {
      Coef f = e[p];
      if (f) axpy(k, e.data(), v.data(), f, 0, n);
    }
    ech.push_back(v);
    piv.push_back(p);
    return true;
  };
  for (int i = 0; i < base.rows; ++i) {
    std::vector<Coef> v(base.row(i), base.row(i) + n);
    push(v);
  }
  std::vector<int> out;
  for (int i = 0; i < cand.rows; ++i) {
    std::vector<Coef> v(cand.row(i), cand.row(i) + n);
    if (push(v)) out.push_back(i);
  }
  return out;
}

}  // namespace cisupport::kernels
