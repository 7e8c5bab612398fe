#include "cisupport/variety/variety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cisupport/exactalg/factor.hpp"
#include "cisupport/resmod/ext.hpp"

namespace cisupport {

namespace {

// Exponent vectors of total degree d in c variables, in grevlex-decreasing order.
std::vector<std::vector<int>> exponents_of_degree(int c, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(c), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == c - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (c == 0) return d == 0 ? std::vector<std::vector<int>>{{}} : out;
  rec(0, d);
  return out;
}

std::vector<Coef> apply(const Field& k, const kernels::DenseMatrix& m, const std::vector<Coef>& v) {
  std::vector<Coef> out(static_cast<std::size_t>(m.rows), 0);
  for (int r = 0; r < m.rows; ++r) {
    Coef s = 0;
    for (int c = 0; c < m.cols; ++c)
      if (v[c] && m.at(r, c)) s = k.add(s, k.mul(m.at(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

}  // namespace

int default_window(const CIRing& ci) { return 2 * (ci.nvars() + ci.codim()) + 4; }
int default_degree_bound(const CIRing& ci) { return ci.nvars() + ci.codim(); }

GradedModule over_hypersurface(const CIRing& ci, const GradedModule& M, const QuotientRingPtr& A) {
  PolyMatrix p = M.presentation();
  for (int i = 0; i < p.rows(); ++i)
    for (const auto& f : ci.fs()) p.append_column(vec::from_poly(f, static_cast<std::uint32_t>(i)), p.row_degrees()[i] + f.degree());
  return GradedModule(A, std::move(p));
}

bool membership(const CIRing& ci, const GradedModule& M, const GradedModule& N, const std::vector<Coef>& a,
                const Field* K) {
  if (static_cast<int>(a.size()) != ci.codim()) throw std::invalid_argument("point has wrong number of coordinates");
  if (std::all_of(a.begin(), a.end(), [](Coef v) { return v == 0; })) return true;
  QuotientRingPtr A = K ? ci.hypersurface_over(*K, a) : ci.hypersurface(a);
  GradedModule MA = over_hypersurface(ci, M, A);
  GradedModule NA = over_hypersurface(ci, N, A);
  const int s = A->dim() + 2;
  FreeResolution F = minimal_resolution(MA, s + 2);
  return !(ext_vanishes(F, NA, s) && ext_vanishes(F, NA, s + 1));
}

std::vector<std::vector<Coef>> all_points(const Field& k, int c, bool include_zero) {
  std::vector<std::vector<Coef>> out;
  std::vector<Coef> a(static_cast<std::size_t>(c), 0);
  const Coef q = k.size();
  while (true) {
    if (include_zero || std::any_of(a.begin(), a.end(), [](Coef v) { return v != 0; })) out.push_back(a);
    int i = c - 1;
    while (i >= 0 && ++a[i] == q) a[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

ExtKModule truncate(const ExtKModule& E, int w) {
  if (w > E.window) throw std::invalid_argument("cannot extend an Ext window by truncation");
  ExtKModule out;
  out.field = E.field;
  out.codim = E.codim;
  out.window = w;
  out.dims.assign(E.dims.begin(), E.dims.begin() + w + 1);
  out.action.assign(E.codim, {});
  for (int i = 0; i < E.codim; ++i)
    for (int n = 0; n + 2 <= w; ++n) out.action[i].push_back(E.action[i][n]);
  return out;
}

std::vector<std::pair<int, std::vector<Coef>>> ext_generators(const ExtKModule& E) {
  std::vector<std::pair<int, std::vector<Coef>>> gens;
  for (int n = 0; n <= E.window; ++n) {
    const int dim = E.dims[n];
    if (dim == 0) continue;
    std::vector<std::vector<Coef>> image;
    if (n >= 2)
      for (int i = 0; i < E.codim; ++i) {
        const auto& m = E.action[i][n - 2];
        for (int c = 0; c < m.cols; ++c) {
          std::vector<Coef> col(static_cast<std::size_t>(dim));
          for (int r = 0; r < m.rows; ++r) col[r] = m.at(r, c);
          image.push_back(std::move(col));
        }
      }
    kernels::DenseMatrix base(static_cast<int>(image.size()), dim);
    for (std::size_t r = 0; r < image.size(); ++r)
      for (int c = 0; c < dim; ++c) base.at(static_cast<int>(r), c) = image[r][c];
    kernels::DenseMatrix cand = kernels::identity(dim);
    for (int r : kernels::independent_rows_modulo(E.field, base, cand)) {
      std::vector<Coef> v(static_cast<std::size_t>(dim), 0);
      v[r] = 1;
      gens.emplace_back(n, std::move(v));
    }
  }
  return gens;
}

std::vector<Poly> annihilator_ideal(const ExtKModule& E, const PolyRing& chi, int degree_bound) {
  if (chi.nvars() != E.codim) throw std::invalid_argument("chi ring does not match the Ext module");
  const Field& k = E.field;
  auto gens = ext_generators(E);
  int top_gen = 0;
  for (const auto& g : gens) top_gen = std::max(top_gen, g.first);
  // Forms of degree d can only be certified on generators with n + 2d in the window.
  const int dmax = std::min(degree_bound, (E.window - top_gen) / 2);

  std::vector<Poly> forms;
  // images[g][alpha] = chi^alpha applied to generator g.
  std::vector<std::map<std::vector<int>, std::vector<Coef>>> images(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) images[g][std::vector<int>(static_cast<std::size_t>(E.codim), 0)] = gens[g].second;
  for (int d = 1; d <= dmax; ++d) {
    auto alphas = exponents_of_degree(E.codim, d);
    std::vector<std::vector<Coef>> rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int n = gens[g].first;
      const int target = n + 2 * d;
      std::vector<std::vector<Coef>> cols;
      for (const auto& alpha : alphas) {
        int i = 0;
        while (alpha[i] == 0) ++i;
        std::vector<int> prev = alpha;
        --prev[i];
        const auto& src = images[g].at(prev);
        auto img = apply(k, E.action[i][target - 2], src);
        images[g][alpha] = img;
        cols.push_back(std::move(img));
      }
      for (int r = 0; r < E.dims[target]; ++r) {
        std::vector<Coef> row;
        for (const auto& col : cols) row.push_back(col[r]);
        rows.push_back(std::move(row));
      }
    }
    kernels::DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(alphas.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < alphas.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    kernels::DenseMatrix ns = kernels::nullspace(k, std::move(m));
    for (int r = 0; r < ns.rows; ++r) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < alphas.size(); ++c)
        if (ns.at(r, static_cast<int>(c))) terms.push_back(Term{ns.at(r, static_cast<int>(c)), chi.monomial(alphas[c])});
      forms.push_back(chi.normalize(std::move(terms)));
    }
  }
  return buchberger(chi, forms);
}

SupportVariety variety_of(const CIRing& ci, const GradedModule& M, const VarietyOptions& opt) {
  const int W = opt.window < 0 ? default_window(ci) : opt.window;
  const int D = opt.degree_bound < 0 ? default_degree_bound(ci) : opt.degree_bound;
  if (W < 2 * ci.codim()) throw std::invalid_argument("Ext window must be at least twice the codimension");
  if (M.ring().canonical() != ci.ring()->canonical()) throw std::invalid_argument("module is not over the complete intersection");
  FreeResolution F = minimal_resolution(M, W + 2);
  OperatorFamily ops = operator_family(ci.poly(), lift_to_ambient(F), ci.fs(), opt.divisor);
  ExtKModule big = ext_module(F, ops);
  SupportVariety V;
  V.chi = ci.chi_ring();
  V.window_used = W;
  V.degree_bound = D;
  V.ideal = annihilator_ideal(truncate(big, W), *V.chi, D);
  V.stabilized = equal_up_to_radical(*V.chi, V.ideal, annihilator_ideal(big, *V.chi, D));
  return V;
}

SupportVariety variety_of_pair(const CIRing& ci, const GradedModule& M, const GradedModule& N, const VarietyOptions& opt) {
  SupportVariety a = variety_of(ci, M, opt);
  if (is_residue_field(N)) return a;
  if (N.presentation() == M.presentation()) return a;
  return intersect(a, variety_of(ci, N, opt));
}

bool ideal_vanishes_at(const PolyRing& chi, const std::vector<Poly>& ideal, const std::vector<Coef>& a, const Field* K) {
  const Field& at = K ? *K : chi.field();
  for (const auto& g : ideal)
    if (chi.evaluate(g, a, at) != 0) return false;
  return true;
}

bool radical_contains(const PolyRing& ring, const std::vector<Poly>& b, const std::vector<Poly>& a) {
  for (const auto& g : a)
    if (!radical_member(ring, g, b)) return false;
  return true;
}

bool equal_up_to_radical(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return radical_contains(ring, b, a) && radical_contains(ring, a, b);
}

std::vector<Poly> ideal_sum(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> g = a;
  g.insert(g.end(), b.begin(), b.end());
  return buchberger(ring, g);
}

std::vector<Poly> ideal_product(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> g;
  for (const auto& x : a)
    for (const auto& y : b) g.push_back(ring.mul(x, y));
  return buchberger(ring, g);
}

SupportVariety intersect(const SupportVariety& a, const SupportVariety& b) {
  SupportVariety out = a;
  out.ideal = ideal_sum(*a.chi, a.ideal, b.ideal);
  out.stabilized = a.stabilized && b.stabilized;
  out.window_used = std::min(a.window_used, b.window_used);
  return out;
}

SupportVariety unite(const SupportVariety& a, const SupportVariety& b) {
  SupportVariety out = a;
  out.ideal = ideal_product(*a.chi, a.ideal, b.ideal);
  out.stabilized = a.stabilized && b.stabilized;
  out.window_used = std::min(a.window_used, b.window_used);
  return out;
}

Poly substitute_linear(const PolyRing& from, const PolyRing& to, const Poly& f,
                       const std::vector<std::vector<Coef>>& images) {
  if (static_cast<int>(images.size()) != from.nvars()) throw std::invalid_argument("substitution needs one image per variable");
  std::vector<Poly> lin;
  for (const auto& img : images) {
    if (static_cast<int>(img.size()) != to.nvars()) throw std::invalid_argument("image has wrong number of coordinates");
    Poly l;
    for (int j = 0; j < to.nvars(); ++j) l = to.add(l, to.scale(to.var(j), img[j]));
    lin.push_back(l);
  }
  Poly out;
  for (const auto& t : f.terms()) {
    Poly m = to.constant(t.c);
    for (int i = 0; i < from.nvars(); ++i)
      if (t.m.exp[i]) m = to.mul(m, to.pow(lin[i], t.m.exp[i]));
    out = to.add(out, m);
  }
  return out;
}

std::vector<Poly> restrict_to_subspace(const SupportVariety& V, const std::vector<std::vector<Coef>>& A, PolyRingPtr target) {
  const PolyRing& chi = *V.chi;
  const int c = chi.nvars();
  const int r = static_cast<int>(A.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("subspace matrix has wrong width");
  if (coefficient_rank(chi.field(), A) != r) throw std::invalid_argument("subspace matrix is not of full row rank");
  if (!target) {
    std::vector<std::string> names;
    for (int j = 1; j <= r; ++j) names.push_back("s" + std::to_string(j));
    target = std::make_shared<PolyRing>(chi.field(), names);
  }
  if (target->nvars() != r) throw std::invalid_argument("target ring has wrong number of variables");
  std::vector<std::vector<Coef>> images(static_cast<std::size_t>(c), std::vector<Coef>(static_cast<std::size_t>(r)));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < r; ++j) images[i][j] = A[j][i];
  std::vector<Poly> out;
  for (const auto& g : V.ideal) out.push_back(substitute_linear(chi, *target, g, images));
  return buchberger(*target, out);
}

int dimension(const SupportVariety& V) { return krull_dimension(*V.chi, V.ideal); }

ComplexityEstimate complexity_estimate(const BettiTable& betti, int skip) {
  const auto& r = betti.ranks;
  ComplexityEstimate est;
  est.reliable = true;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<long long> s;
    for (int n = skip; n < static_cast<int>(r.size()); ++n)
      if (n % 2 == parity) s.push_back(r[n]);
    int order = 0;
    bool found = false;
    while (!s.empty()) {
      if (std::all_of(s.begin(), s.end(), [](long long v) { return v == 0; })) {
        found = true;
        // Two zero entries at least, or the fit is not certified.
        if (s.size() < 2) est.reliable = false;
        break;
      }
      std::vector<long long> next;
      for (std::size_t i = 1; i < s.size(); ++i) next.push_back(s[i] - s[i - 1]);
      s = std::move(next);
      ++order;
    }
    if (!found) est.reliable = false;
    est.complexity = std::max(est.complexity, order);
  }
  return est;
}

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Yes:
      return "yes";
    case Irreducibility::No:
      return "no";
    default:
      return "unknown";
  }
}

Irreducibility irreducible_principal(const SupportVariety& V) {
  const PolyRing& chi = *V.chi;
  if (V.ideal.empty()) return Irreducibility::Yes;
  if (std::all_of(V.ideal.begin(), V.ideal.end(), [](const Poly& g) { return g.degree() == 1; }))
    return Irreducibility::Yes;
  for (const auto& g : V.ideal) {
    auto factors = homogeneous_irreducible_factors(chi, g);
    if (!factors) return Irreducibility::Unknown;
    Poly h = chi.one();
    for (const auto& f : *factors) h = chi.mul(h, f);
    if (!equal_up_to_radical(chi, {h}, V.ideal)) continue;
    return factors->size() == 1 ? Irreducibility::Yes : Irreducibility::No;
  }
  return Irreducibility::Unknown;
}

}  // namespace cisupport
