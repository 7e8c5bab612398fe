#include "cisupport/resmod/ring.hpp"

#include <functional>
#include <stdexcept>

#include "cisupport/exactalg/poly_text.hpp"
#include "cisupport/kernels/dense_modp.hpp"

namespace cisupport {

namespace {

// All monomials of weighted degree d, decreasing in grevlex.
std::vector<Monomial> monomials_of_degree(const PolyRing& Q, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = Q.nvars();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(Q.monomial(e));
      return;
    }
    const int w = Q.weights()[i];
    for (int a = left / w; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a * w);
    }
    e[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace

QuotientRing::QuotientRing(PolyRingPtr Q, std::vector<Poly> relations)
    : Q_(std::move(Q)), relations_(std::move(relations)) {
  for (const auto& f : relations_)
    if (!f.is_zero() && !f.is_homogeneous()) throw std::invalid_argument("quotient relations must be homogeneous");
  gb_ = buchberger(*Q_, relations_);
  std::vector<Monomial> leads;
  for (const auto& g : gb_) leads.push_back(g.lead().m);
  dim_ = monomial_krull_dimension(Q_->nvars(), leads);
  if (dim_ == 0) {
    int bound = 0;
    for (int i = 0; i < Q_->nvars(); ++i) {
      int best = -1;
      for (const auto& m : leads) {
        bool pure = (m.mask & 0xffffu) == (1u << i);
        if (pure && (best < 0 || m.exp[i] < best)) best = m.exp[i];
      }
      bound += (best - 1) * Q_->weights()[i];
    }
    for (int d = bound; d >= 0; --d)
      if (!standard_monomials(d).empty()) {
        top_degree_ = d;
        break;
      }
  }
}

const std::vector<Monomial>& QuotientRing::standard_monomials(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = standard_.find(d);
  if (it != standard_.end()) return it->second;
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*Q_, d)) {
    bool standard = true;
    for (const auto& g : gb_)
      if (divides(g.lead().m, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return standard_.emplace(d, std::move(out)).first->second;
}

std::string QuotientRing::canonical() const {
  std::string s = Q_->canonical() + "|rel:";
  for (std::size_t i = 0; i < gb_.size(); ++i) {
    if (i) s += ",";
    s += format_poly(*Q_, gb_[i]);
  }
  return s;
}

int coefficient_rank(const Field& k, const std::vector<std::vector<Coef>>& A) {
  if (A.empty()) return 0;
  kernels::DenseMatrix m(static_cast<int>(A.size()), static_cast<int>(A.front().size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != A.front().size()) throw std::invalid_argument("ragged coefficient matrix");
    for (std::size_t j = 0; j < A[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = A[i][j];
  }
  return kernels::rank(k, m);
}

CIRing::CIRing(PolyRingPtr Q, std::vector<Poly> fs) : Q_(std::move(Q)), fs_(std::move(fs)) {
  auto rep = check_regular_sequence(*Q_, fs_);
  if (!rep.regular) throw std::invalid_argument("not a regular sequence in the square of the maximal ideal: " + rep.reason);
  R_ = std::make_shared<QuotientRing>(Q_, fs_);
  ambient_ = std::make_shared<QuotientRing>(Q_, std::vector<Poly>{});
  std::vector<std::string> names;
  for (int i = 1; i <= codim(); ++i) names.push_back("chi" + std::to_string(i));
  chi_ = std::make_shared<PolyRing>(field(), names);
}

Poly CIRing::section(const std::vector<Coef>& a) const {
  if (a.size() != fs_.size()) throw std::invalid_argument("point has wrong number of coordinates");
  Poly f;
  for (std::size_t i = 0; i < fs_.size(); ++i) f = Q_->add(f, Q_->scale(fs_[i], a[i]));
  return f;
}

QuotientRingPtr CIRing::hypersurface(const std::vector<Coef>& a) const {
  Poly f = section(a);
  if (f.is_zero()) throw std::invalid_argument("hypersurface needs a nonzero point");
  return std::make_shared<QuotientRing>(Q_, std::vector<Poly>{f});
}

QuotientRingPtr CIRing::hypersurface_over(const Field& K, const std::vector<Coef>& a) const {
  if (K.characteristic() != field().characteristic()) throw std::invalid_argument("extension field has wrong characteristic");
  if (a.size() != fs_.size()) throw std::invalid_argument("point has wrong number of coordinates");
  auto QK = std::make_shared<PolyRing>(K, Q_->names(), Q_->weights());
  Poly f;
  for (std::size_t i = 0; i < fs_.size(); ++i) f = QK->add(f, QK->scale(fs_[i], a[i]));
  if (f.is_zero()) throw std::invalid_argument("hypersurface needs a nonzero point");
  return std::make_shared<QuotientRing>(QK, std::vector<Poly>{f});
}

CIRing CIRing::intermediate(const std::vector<std::vector<Coef>>& A) const {
  for (const auto& row : A)
    if (row.size() != fs_.size()) throw std::invalid_argument("subspace matrix has wrong width");
  if (coefficient_rank(field(), A) != static_cast<int>(A.size()))
    throw std::invalid_argument("subspace matrix is not of full row rank");
  std::vector<Poly> gs;
  for (const auto& row : A) gs.push_back(section(row));
  return CIRing(Q_, gs);
}

std::string CIRing::canonical() const {
  std::string s = Q_->canonical() + "|ci:";
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    if (i) s += ",";
    s += format_poly(*Q_, fs_[i]);
  }
  return s;
}

}  // namespace cisupport
