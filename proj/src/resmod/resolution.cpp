#include "cisupport/resmod/resolution.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cisupport/exactalg/poly_text.hpp"
#include "cisupport/kernels/dense_modp.hpp"
#include "cisupport/kernels/parallel.hpp"

namespace cisupport {

std::vector<std::array<int, 3>> BettiTable::graded() const {
  std::vector<std::array<int, 3>> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::map<int, int> count;
    for (int d : degrees[i]) ++count[d];
    for (auto [d, c] : count) out.push_back({static_cast<int>(i), d, c});
  }
  return out;
}

int FreeResolution::rank(int n) const { return static_cast<int>(degrees(n).size()); }

const std::vector<int>& FreeResolution::degrees(int n) const {
  if (n < 0 || n > length) throw std::out_of_range("homological degree outside the resolution");
  return n == 0 ? f0_degrees : d[n - 1].col_degrees();
}

BettiTable FreeResolution::betti() const {
  BettiTable t;
  for (int n = 0; n <= length; ++n) {
    t.ranks.push_back(rank(n));
    t.degrees.push_back(degrees(n));
  }
  return t;
}

const PolyMatrix& FreeResolution::differential(int n) const {
  if (n < 1 || n > length) throw std::out_of_range("differential index outside the resolution");
  return d[n - 1];
}

namespace {

// Coordinates of the degree-t part of a graded free module over an artinian
// ring: pairs (basis element, standard monomial).
struct Slice {
  std::vector<std::pair<int, int>> coords;  // (generator, index into standard monomials)
  std::vector<int> offset;                  // first coordinate of each generator (or -1)
};

Slice make_slice(const QuotientRing& A, const std::vector<int>& degs, int t) {
  Slice s;
  s.offset.assign(degs.size(), -1);
  for (std::size_t j = 0; j < degs.size(); ++j) {
    const auto& mons = A.standard_monomials(t - degs[j]);
    if (t - degs[j] < 0 || mons.empty()) continue;
    s.offset[j] = static_cast<int>(s.coords.size());
    for (std::size_t u = 0; u < mons.size(); ++u) s.coords.push_back({static_cast<int>(j), static_cast<int>(u)});
  }
  return s;
}

int monomial_index(const std::vector<Monomial>& mons, const Monomial& m) {
  auto it = std::lower_bound(mons.begin(), mons.end(), m,
                             [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  if (it == mons.end() || !(*it == m)) throw std::logic_error("normal form left the standard basis");
  return static_cast<int>(it - mons.begin());
}

// Writes the normal form of (poly placed on generator i) into row vector v.
void scatter(const QuotientRing& A, const Poly& nf, int gen, int deg, const Slice& s, std::vector<Coef>& v) {
  if (nf.is_zero()) return;
  const auto& mons = A.standard_monomials(deg);
  for (const auto& t : nf.terms()) v[s.offset[gen] + monomial_index(mons, t.m)] = t.c;
}

}  // namespace

PolyMatrix artinian_kernel(const QuotientRing& A, const PolyMatrix& m) {
  if (!A.artinian()) throw std::invalid_argument("linear-algebra kernel needs an artinian ring");
  const PolyRing& Q = A.poly();
  const Field& k = Q.field();
  const auto& src = m.col_degrees();
  const auto& dst = m.row_degrees();
  PolyMatrix out(src, {});
  if (src.empty()) return out;
  const int top = A.top_degree();
  const int tmin = *std::min_element(src.begin(), src.end());
  const int tmax = *std::max_element(src.begin(), src.end()) + top;
  const int span = tmax - tmin + 1;

  // Kernel basis of the map in each source degree.
  std::vector<Slice> slices(static_cast<std::size_t>(span));
  for (int t = tmin; t <= tmax; ++t) slices[t - tmin] = make_slice(A, src, t);
  // Warm the standard-monomial cache serially; lookups below are read-only.
  for (int t = tmin; t <= tmax; ++t)
    for (int dd : dst) A.standard_monomials(t - dd);

  auto kernels_by_degree = kernels::parallel_map<kernels::DenseMatrix>(span, [&](int idx) {
    const int t = tmin + idx;
    const Slice& s = slices[idx];
    Slice target = make_slice(A, dst, t);
    kernels::DenseMatrix phi(static_cast<int>(target.coords.size()), static_cast<int>(s.coords.size()));
    for (std::size_t c = 0; c < s.coords.size(); ++c) {
      auto [j, u] = s.coords[c];
      const Monomial& mu = A.standard_monomials(t - src[j])[u];
      std::vector<Coef> col(target.coords.size(), 0);
      for (int i = 0; i < m.rows(); ++i) {
        const Poly& e = m.at(i, j);
        if (e.is_zero() || target.offset[i] < 0) continue;
        scatter(A, A.reduce(Q.mul_term(e, 1, mu)), i, t - dst[i], target, col);
      }
      for (std::size_t r = 0; r < col.size(); ++r) phi.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    return kernels::nullspace(k, std::move(phi));
  });

  // New generators in degree t: a complement of sum_v x_v K_{t - w_v} in K_t.
  auto new_gens = kernels::parallel_map<std::vector<std::vector<Coef>>>(span, [&](int idx) {
    const int t = tmin + idx;
    const auto& K = kernels_by_degree[idx];
    std::vector<std::vector<Coef>> result;
    if (K.rows == 0) return result;
    const Slice& s = slices[idx];
    std::vector<std::vector<Coef>> image;
    for (int v = 0; v < Q.nvars(); ++v) {
      const int w = Q.weights()[v];
      const int pidx = idx - w;
      if (pidx < 0) continue;
      const auto& Kp = kernels_by_degree[pidx];
      const Slice& ps = slices[pidx];
      const Monomial xv = Q.var_monomial(v);
      for (int r = 0; r < Kp.rows; ++r) {
        std::vector<Coef> img(s.coords.size(), 0);
        bool any = false;
        for (std::size_t c = 0; c < ps.coords.size(); ++c) {
          Coef a = Kp.at(r, static_cast<int>(c));
          if (!a) continue;
          auto [j, u] = ps.coords[c];
          const Monomial& mu = A.standard_monomials(t - w - src[j])[u];
          Poly nf = A.reduce(Q.term(1, mono_mul(xv, mu)));
          if (nf.is_zero()) continue;
          const auto& mons = A.standard_monomials(t - src[j]);
          for (const auto& term : nf.terms()) {
            Coef& slot = img[s.offset[j] + monomial_index(mons, term.m)];
            slot = k.add(slot, k.mul(a, term.c));
          }
          any = true;
        }
        if (any) image.push_back(std::move(img));
      }
    }
    kernels::DenseMatrix base(static_cast<int>(image.size()), static_cast<int>(s.coords.size()));
    for (std::size_t r = 0; r < image.size(); ++r)
      for (std::size_t c = 0; c < s.coords.size(); ++c) base.at(static_cast<int>(r), static_cast<int>(c)) = image[r][c];
    for (int r : kernels::independent_rows_modulo(k, base, K))
      result.emplace_back(K.row(r), K.row(r) + K.cols);
    return result;
  });

  for (int idx = 0; idx < span; ++idx) {
    const int t = tmin + idx;
    const Slice& s = slices[idx];
    for (const auto& v : new_gens[idx]) {
      std::vector<std::vector<Term>> entries(src.size());
      for (std::size_t c = 0; c < s.coords.size(); ++c) {
        if (!v[c]) continue;
        auto [j, u] = s.coords[c];
        entries[j].push_back(Term{v[c], A.standard_monomials(t - src[j])[u]});
      }
      Vec col;
      ModuleOrder ord = ModuleOrder::graded(src);
      std::vector<VTerm> terms;
      for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& term : entries[j]) terms.push_back(VTerm{term.c, static_cast<std::uint32_t>(j), term.m});
      col = vec::normalize(k, ord, std::move(terms));
      out.append_column(col, t);
    }
  }
  return out;
}

namespace {

std::mutex g_store_mu;
std::shared_ptr<ResolutionStore> g_store;

PolyMatrix next_differential(const QuotientRing& A, const PolyMatrix& prev, bool linear_algebra) {
  if (prev.cols() == 0) return PolyMatrix({}, {});
  if (linear_algebra && A.artinian()) return artinian_kernel(A, prev);
  return syzygies(A.poly(), prev, A.gb());
}

FreeResolution start_resolution(const GradedModule& M) {
  GradedModule Mm = M.minimize();
  FreeResolution F;
  F.ring = M.ring_ptr();
  F.f0_degrees = Mm.degrees();
  F.d.push_back(Mm.presentation());
  F.length = 0;
  F.finite = Mm.num_generators() == 0;
  return F;
}

FreeResolution compute(const GradedModule& M, int L, bool linear_algebra) {
  if (L < 0) throw std::invalid_argument("resolution length must be non-negative");
  require_homogeneous(M);
  FreeResolution F = start_resolution(M);
  if (L == 0) {
    F.d.clear();
    return F;
  }
  F.length = 1;
  if (F.d[0].cols() == 0) F.finite = true;
  extend_resolution(F, L, linear_algebra);
  return F;
}

}  // namespace

void extend_resolution(FreeResolution& F, int L, bool use_linear_algebra) {
  while (F.length < L) {
    const PolyMatrix& prev = F.d.back();
    PolyMatrix next = next_differential(*F.ring, prev, use_linear_algebra);
    if (next.cols() == 0) F.finite = true;
    F.d.push_back(std::move(next));
    ++F.length;
  }
}

FreeResolution minimal_resolution(const GradedModule& M, int L) {
  std::shared_ptr<ResolutionStore> store = resolution_store();
  std::string key;
  if (store) {
    key = resolution_key(M, L);
    if (auto hit = store->load(key, M.ring_ptr())) return *hit;
  }
  FreeResolution F = compute(M, L, true);
  if (store) store->save(key, F);
  return F;
}

FreeResolution minimal_resolution_groebner(const GradedModule& M, int L) { return compute(M, L, false); }

GradedModule syzygy_module(const FreeResolution& F, const GradedModule& M, int n) {
  if (n == 0) return M.minimize();
  if (F.length < n + 1) throw std::invalid_argument("resolution too short for the requested syzygy");
  PolyMatrix p = F.differential(n + 1);
  p.set_row_degrees(F.degrees(n));
  return GradedModule(F.ring, p);
}

GradedModule syzygy_module(const GradedModule& M, int n) {
  if (n == 0) return M.minimize();
  return syzygy_module(minimal_resolution(M, n + 1), M, n);
}

bool is_complex(const FreeResolution& F) {
  for (int n = 1; n < F.length; ++n) {
    const auto& a = F.differential(n);
    const auto& b = F.differential(n + 1);
    if (b.cols() == 0 || a.rows() == 0) continue;
    if (!reduce_entries(F.ring->poly(), multiply(F.ring->poly(), a, b), F.ring->gb()).is_zero()) return false;
  }
  return true;
}

bool has_minimal_entries(const FreeResolution& F) {
  for (const auto& m : F.d)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero() && m.at(i, j).constant_term() != 0) return false;
  return true;
}

bool is_exact(const FreeResolution& F) {
  if (!is_complex(F)) return false;
  for (int n = 1; n < F.length; ++n) {
    PolyMatrix ker = syzygies(F.ring->poly(), F.differential(n), F.ring->gb());
    if (!columns_contained(F.ring->poly(), ker, F.differential(n + 1), F.ring->gb())) return false;
  }
  return true;
}

void set_resolution_store(std::shared_ptr<ResolutionStore> store) {
  std::lock_guard<std::mutex> lock(g_store_mu);
  g_store = std::move(store);
}

std::shared_ptr<ResolutionStore> resolution_store() {
  std::lock_guard<std::mutex> lock(g_store_mu);
  return g_store;
}

std::string module_canonical(const GradedModule& M) {
  const PolyRing& Q = M.ring().poly();
  const PolyMatrix& p = M.presentation();
  std::string s = M.ring().canonical() + "|gens:";
  for (int d : p.row_degrees()) s += std::to_string(d) + ",";
  s += "|rels:";
  for (int d : p.col_degrees()) s += std::to_string(d) + ",";
  s += "|entries:";
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) s += format_poly(Q, p.at(i, j)) + ";";
  return s;
}

std::string resolution_key(const GradedModule& M, int L) {
  return "resolution|" + module_canonical(M) + "|length:" + std::to_string(L);
}

}  // namespace cisupport
