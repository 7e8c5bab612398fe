#include "cisupport/resmod/module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cisupport {

namespace {

// Leading monomials, per generator, of a Groebner basis of im(pres) + J*F0.
std::vector<std::vector<Monomial>> module_leads(const QuotientRing& A, const PolyMatrix& pres) {
  const PolyRing& Q = A.poly();
  ModuleOrder ord = ModuleOrder::graded(pres.row_degrees());
  GroebnerEngine eng(Q, ord);
  for (int i = 0; i < pres.rows(); ++i)
    for (const auto& g : A.gb()) eng.add_background(vec::from_poly(g, static_cast<std::uint32_t>(i)));
  for (int j = 0; j < pres.cols(); ++j) {
    Vec v = pres.column_vec(Q.field(), ord, j);
    if (!v.empty()) eng.add_background(std::move(v));
  }
  eng.run();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(pres.rows()));
  for (const auto& v : eng.basis()) leads[v.front().comp].push_back(v.front().m);
  return leads;
}

long long count_standard(const PolyRing& Q, const std::vector<Monomial>& leads, int d) {
  if (d < 0) return 0;
  const int n = Q.nvars();
  long long count = 0;
  // Enumerate exponent vectors of weighted degree d.
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto visit = [&]() {
    Monomial mm = Q.monomial(e);
    for (const auto& l : leads)
      if (divides(l, mm)) return;
    ++count;
  };
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) visit();
      return;
    }
    const int w = Q.weights()[i];
    for (int a = 0; a * w <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a * w);
    }
    e[i] = 0;
  };
  if (n == 0) return d == 0 ? (leads.empty() ? 1 : 0) : 0;
  rec(0, d);
  return count;
}

}  // namespace

GradedModule::GradedModule(QuotientRingPtr A, PolyMatrix presentation) : A_(std::move(A)), pres_(std::move(presentation)) {
  for (int i = 0; i < pres_.rows(); ++i)
    for (int j = 0; j < pres_.cols(); ++j)
      if (!A_->poly().owns(pres_.at(i, j))) throw std::invalid_argument("presentation entry outside the ring");
  pres_ = reduce_entries(A_->poly(), pres_, A_->gb());
}

GradedModule GradedModule::free(QuotientRingPtr A, std::vector<int> degrees) {
  return GradedModule(std::move(A), PolyMatrix(std::move(degrees), {}));
}

GradedModule GradedModule::zero(QuotientRingPtr A) { return GradedModule(std::move(A), PolyMatrix({}, {})); }

GradedModule GradedModule::cyclic(QuotientRingPtr A, const std::vector<Poly>& gens, int shift) {
  std::vector<int> cd;
  std::vector<Poly> keep;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("cyclic module generators must be homogeneous");
    cd.push_back(g.degree() + shift);
    keep.push_back(g);
  }
  PolyMatrix m({shift}, cd);
  for (std::size_t j = 0; j < keep.size(); ++j) m.at(0, static_cast<int>(j)) = keep[j];
  return GradedModule(std::move(A), std::move(m));
}

GradedModule GradedModule::residue_field(QuotientRingPtr A) {
  std::vector<Poly> vars;
  for (int i = 0; i < A->poly().nvars(); ++i) vars.push_back(A->poly().var(i));
  return cyclic(std::move(A), vars);
}

GradedModule GradedModule::minimize() const {
  const PolyRing& Q = A_->poly();
  const Field& k = Q.field();
  PolyMatrix m = pres_;
  while (true) {
    int pi = -1, pj = -1;
    for (int j = 0; j < m.cols() && pj < 0; ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, j).is_constant()) {
          pi = i;
          pj = j;
          break;
        }
    if (pj < 0) break;
    const Coef inv = k.inv(m.at(pi, pj).lead().c);
    for (int l = 0; l < m.cols(); ++l) {
      if (l == pj || m.at(pi, l).is_zero()) continue;
      Poly factor = Q.scale(m.at(pi, l), inv);
      for (int i = 0; i < m.rows(); ++i) {
        if (m.at(i, pj).is_zero()) continue;
        m.at(i, l) = A_->reduce(Q.sub(m.at(i, l), Q.mul(factor, m.at(i, pj))));
      }
    }
    std::vector<int> rows, cols;
    for (int i = 0; i < m.rows(); ++i)
      if (i != pi) rows.push_back(i);
    for (int j = 0; j < m.cols(); ++j)
      if (j != pj) cols.push_back(j);
    m = m.select_rows(rows).select_columns(cols);
  }
  std::vector<int> nonzero;
  for (int j = 0; j < m.cols(); ++j) {
    bool z = true;
    for (int i = 0; i < m.rows() && z; ++i) z = m.at(i, j).is_zero();
    if (!z) nonzero.push_back(j);
  }
  m = m.select_columns(nonzero);
  m = m.select_columns(minimal_columns(Q, m, A_->gb()));
  GradedModule out;
  out.A_ = A_;
  out.pres_ = std::move(m);
  return out;
}

bool GradedModule::is_minimal() const {
  for (int i = 0; i < pres_.rows(); ++i)
    for (int j = 0; j < pres_.cols(); ++j)
      if (!pres_.at(i, j).is_zero() && pres_.at(i, j).constant_term() != 0) return false;
  return static_cast<int>(minimal_columns(A_->poly(), pres_, A_->gb()).size()) == pres_.cols();
}

GradedModule GradedModule::over(QuotientRingPtr B) const {
  if (B->poly().names() != A_->poly().names()) throw std::invalid_argument("change of rings needs the same variables");
  return GradedModule(std::move(B), pres_);
}

GradedModule GradedModule::restrict_to(QuotientRingPtr A) const {
  if (A->poly().names() != A_->poly().names()) throw std::invalid_argument("restriction needs the same variables");
  for (const auto& g : A->gb())
    if (!A_->reduce(g).is_zero()) throw std::invalid_argument("restriction target is not a subring quotient");
  PolyMatrix m = pres_;
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& g : A_->gb()) {
      Poly r = A->reduce(g);
      if (r.is_zero()) continue;
      Vec v = vec::from_poly(r, static_cast<std::uint32_t>(i));
      m.append_column(v, m.row_degrees()[i] + r.degree());
    }
  return GradedModule(std::move(A), std::move(m));
}

std::vector<long long> GradedModule::hilbert_function(int from, int to) const {
  auto leads = module_leads(*A_, pres_);
  std::vector<long long> out;
  for (int t = from; t <= to; ++t) {
    long long s = 0;
    for (int i = 0; i < pres_.rows(); ++i) s += count_standard(A_->poly(), leads[i], t - pres_.row_degrees()[i]);
    out.push_back(s);
  }
  return out;
}

int GradedModule::krull_dim() const {
  auto leads = module_leads(*A_, pres_);
  int best = -1;
  for (const auto& l : leads) best = std::max(best, monomial_krull_dimension(A_->poly().nvars(), l));
  return best;
}

bool GradedModule::is_zero() const { return krull_dim() < 0; }

std::pair<int, int> GradedModule::degree_span() const {
  if (pres_.rows() == 0) return {0, -1};
  auto leads = module_leads(*A_, pres_);
  const PolyRing& Q = A_->poly();
  int lo = *std::min_element(pres_.row_degrees().begin(), pres_.row_degrees().end());
  int hi = lo;
  for (int i = 0; i < pres_.rows(); ++i) {
    int bound = 0;
    for (int v = 0; v < Q.nvars(); ++v) {
      int best = -1;
      for (const auto& m : leads[i])
        if ((m.mask & 0xffffu) == (1u << v) && (best < 0 || m.exp[v] < best)) best = m.exp[v];
      if (best < 0) {
        bool unit = std::any_of(leads[i].begin(), leads[i].end(), [](const Monomial& m) { return m.is_one(); });
        if (unit) {
          best = 0;
        } else {
          throw std::logic_error("degree span requested for a module of positive dimension");
        }
      }
      bound += std::max(best - 1, 0) * Q.weights()[v];
    }
    hi = std::max(hi, pres_.row_degrees()[i] + bound);
  }
  return {lo, hi};
}

long long GradedModule::length() const {
  auto [lo, hi] = degree_span();
  long long s = 0;
  for (auto v : hilbert_function(lo, hi)) s += v;
  return s;
}

GradedModule prune(const GradedModule& M) { return M.minimize(); }

void require_homogeneous(const GradedModule& M) {
  if (!M.presentation().is_homogeneous()) throw std::invalid_argument("module presentation is not homogeneous");
}

}  // namespace cisupport
