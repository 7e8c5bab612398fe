#include "cisupport/eisenbud/operators.hpp"

#include <stdexcept>

#include "cisupport/kernels/parallel.hpp"

namespace cisupport {

namespace {

kernels::DenseMatrix constant_part(const PolyMatrix& m) {
  kernels::DenseMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).constant_term();
  return out;
}

PolyMatrix scaled(const PolyRing& Q, const PolyMatrix& m, Coef c) {
  PolyMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Q.scale(m.at(i, j), c);
  return out;
}

PolyMatrix add(const PolyRing& Q, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = Q.add(a.at(i, j), b.at(i, j));
  return out;
}

}  // namespace

std::vector<PolyMatrix> lift_to_ambient(const FreeResolution& F) {
  std::vector<PolyMatrix> out;
  for (const auto& d : F.d) out.push_back(reduce_entries(F.ring->poly(), d, F.ring->gb()));
  return out;
}

OperatorFamily operator_family(const PolyRing& Q, const std::vector<PolyMatrix>& lifted, const std::vector<Poly>& fs,
                               DivisorChoice divisor) {
  OperatorFamily ops;
  ops.fs = fs;
  ops.length = static_cast<int>(lifted.size());
  const int c = static_cast<int>(fs.size());
  ops.t.assign(c, std::vector<PolyMatrix>(static_cast<std::size_t>(ops.length + 1)));
  ops.scalar.assign(c, std::vector<kernels::DenseMatrix>(static_cast<std::size_t>(ops.length + 1)));
  WitnessBasis wb(Q, fs, divisor);
  const int steps = std::max(ops.length - 1, 0);
  auto solved = kernels::parallel_map<std::vector<PolyMatrix>>(steps, [&](int idx) {
    const int n = idx + 2;
    const PolyMatrix& a = lifted[n - 2];  // d_{n-1}
    const PolyMatrix& b = lifted[n - 1];  // d_n
    PolyMatrix sq = multiply(Q, a, b);
    std::vector<PolyMatrix> ts;
    for (int i = 0; i < c; ++i) {
      std::vector<int> cd;
      for (int dgr : b.col_degrees()) cd.push_back(dgr - fs[i].degree());
      ts.emplace_back(a.row_degrees(), cd);
    }
    for (int r = 0; r < sq.rows(); ++r)
      for (int col = 0; col < sq.cols(); ++col) {
        const Poly& e = sq.at(r, col);
        if (e.is_zero()) continue;
        auto w = wb.witness(e);
        if (!w) throw std::logic_error("square of a lifted differential is not in the defining ideal");
        for (int i = 0; i < c; ++i) ts[i].at(r, col) = (*w)[i];
      }
    return ts;
  });
  for (int idx = 0; idx < steps; ++idx)
    for (int i = 0; i < c; ++i) {
      ops.scalar[i][idx + 2] = constant_part(solved[idx][i]);
      ops.t[i][idx + 2] = std::move(solved[idx][i]);
    }
  return ops;
}

bool satisfies_defining_identity(const PolyRing& Q, const std::vector<PolyMatrix>& lifted, const OperatorFamily& ops) {
  for (int n = 2; n <= ops.length; ++n) {
    PolyMatrix sq = multiply(Q, lifted[n - 2], lifted[n - 1]);
    for (int r = 0; r < sq.rows(); ++r)
      for (int col = 0; col < sq.cols(); ++col) {
        Poly s;
        for (std::size_t i = 0; i < ops.fs.size(); ++i) s = Q.add(s, Q.mul(ops.fs[i], ops.t[i][n].at(r, col)));
        if (!(s == sq.at(r, col))) return false;
      }
  }
  return true;
}

bool operators_are_chain_maps(const FreeResolution& F, const OperatorFamily& ops) {
  const PolyRing& Q = F.ring->poly();
  for (std::size_t i = 0; i < ops.fs.size(); ++i)
    for (int n = 3; n <= ops.length; ++n) {
      const PolyMatrix& tn = ops.t[i][n];
      const PolyMatrix& tp = ops.t[i][n - 1];
      if (tn.cols() == 0 || tn.rows() == 0) continue;
      PolyMatrix left = n - 2 >= 1 ? multiply(Q, F.differential(n - 2), tn) : PolyMatrix();
      PolyMatrix right = multiply(Q, tp, F.differential(n));
      if (left.rows() != right.rows() || left.cols() != right.cols()) return false;
      for (int r = 0; r < left.rows(); ++r)
        for (int c = 0; c < left.cols(); ++c)
          if (!F.ring->reduce(Q.sub(left.at(r, c), right.at(r, c))).is_zero()) return false;
    }
  return true;
}

kernels::DenseMatrix ExtKModule::monomial_map(const std::vector<int>& alpha, int n) const {
  int total = 0;
  for (int a : alpha) total += a;
  if (n + 2 * total > window) throw std::out_of_range("monomial leaves the Ext window");
  kernels::DenseMatrix m = kernels::identity(dims[n]);
  int deg = n;
  for (int i = static_cast<int>(alpha.size()) - 1; i >= 0; --i)
    for (int e = 0; e < alpha[i]; ++e) {
      m = kernels::multiply(field, action[i][deg], m);
      deg += 2;
    }
  return m;
}

bool ExtKModule::commutes() const {
  for (int i = 0; i < codim; ++i)
    for (int j = i + 1; j < codim; ++j)
      for (int n = 0; n + 4 <= window; ++n) {
        auto a = kernels::multiply(field, action[i][n + 2], action[j][n]);
        auto b = kernels::multiply(field, action[j][n + 2], action[i][n]);
        if (!(a == b)) return false;
      }
  return true;
}

ExtKModule ext_module(const FreeResolution& F, const OperatorFamily& ops) {
  ExtKModule E;
  E.field = F.ring->field();
  E.codim = static_cast<int>(ops.fs.size());
  E.window = F.length;
  for (int n = 0; n <= F.length; ++n) E.dims.push_back(F.rank(n));
  E.action.assign(E.codim, {});
  for (int i = 0; i < E.codim; ++i)
    for (int n = 0; n + 2 <= E.window; ++n) {
      const auto& s = ops.scalar[i][n + 2];
      // Degenerate shapes after a finite end still need the right size.
      kernels::DenseMatrix m(E.dims[n + 2], E.dims[n]);
      if (s.rows == E.dims[n] && s.cols == E.dims[n + 2]) m = kernels::transpose(s);
      E.action[i].push_back(std::move(m));
    }
  return E;
}

ExtKModule chi_action(const CIRing& ci, const GradedModule& M, int window, DivisorChoice divisor) {
  if (window < 2) throw std::invalid_argument("Ext window must be at least 2");
  if (M.ring().canonical() != ci.ring()->canonical()) throw std::invalid_argument("module is not over the complete intersection");
  FreeResolution F = minimal_resolution(M, window);
  OperatorFamily ops = operator_family(ci.poly(), lift_to_ambient(F), ci.fs(), divisor);
  return ext_module(F, ops);
}

std::vector<PolyMatrix> evaluate_chi_class(const CIRing& ci, const Poly& p, const FreeResolution& F,
                                           const OperatorFamily& ops) {
  const PolyRing& X = *ci.chi_ring();
  const PolyRing& Q = ci.poly();
  if (!p.is_zero() && !p.is_homogeneous()) throw std::invalid_argument("chi class must be homogeneous");
  const int d = p.is_zero() ? 0 : p.degree();
  if (ops.length < 2 * d || F.length < 2 * d) throw std::invalid_argument("resolution window too short for the chi class");
  // Internal degree shift of each monomial; a mixed shift has no graded meaning.
  int shift = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    int s = 0;
    for (int i = 0; i < X.nvars(); ++i) s += t.m.exp[i] * ci.fs()[i].degree();
    if (!first && s != shift) throw std::invalid_argument("chi class is not homogeneous for the internal grading");
    shift = s;
    first = false;
  }
  std::vector<PolyMatrix> out(static_cast<std::size_t>(F.length + 1));
  for (int n = 2 * d; n <= F.length; ++n) {
    std::vector<int> cd;
    for (int g : F.degrees(n)) cd.push_back(g - shift);
    PolyMatrix acc(F.degrees(n - 2 * d), cd);
    for (const auto& term : p.terms()) {
      PolyMatrix comp = identity_matrix(Q, F.degrees(n));
      int deg = n;
      for (int i = X.nvars() - 1; i >= 0; --i)
        for (unsigned e = 0; e < term.m.exp[i]; ++e) {
          comp = multiply(Q, ops.t[i][deg], comp);
          deg -= 2;
        }
      acc = add(Q, acc, scaled(Q, comp, term.c));
    }
    acc.set_col_degrees(cd);
    out[n] = reduce_entries(Q, acc, F.ring->gb());
  }
  return out;
}

}  // namespace cisupport
