#include "cisupport/exactalg/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cisupport {

namespace upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly sub(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly mul(const Field& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const Field& k, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  const Coef inv_lead = k.inv(b.back());
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    Coef c = k.mul(r[i], inv_lead);
    if (!c) continue;
    int shift = i - (static_cast<int>(b.size()) - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = k.sub(r[shift + j], k.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const Field& k, const UPoly& a, const UPoly& m) { return divmod(k, a, m).second; }

UPoly monic(const Field& k, const UPoly& a) {
  if (a.empty()) return a;
  Coef inv = k.inv(a.back());
  UPoly r = a;
  for (auto& c : r) c = k.mul(c, inv);
  return r;
}

UPoly gcd(const Field& k, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

UPoly powmod(const Field& k, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly result{1};
  result = mod(k, result, m);
  base = mod(k, base, m);
  while (e) {
    if (e & 1) result = mod(k, mul(k, result, base), m);
    e >>= 1;
    if (e) base = mod(k, mul(k, base, base), m);
  }
  return result;
}

UPoly derivative(const Field& k, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(a[i], k.from_int(static_cast<long long>(i)));
  trim(r);
  return r;
}

}  // namespace upoly

namespace {

using namespace upoly;

// Frobenius inverse on coefficients, then t^p -> t.
UPoly pth_root(const Field& k, const UPoly& a) {
  const std::uint32_t p = k.characteristic();
  const std::uint64_t root_exp = k.size() / p;  // a^(q/p) is the p-th root in GF(q)
  UPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(k.pow(a[i], root_exp));
  trim(r);
  return r;
}

// Square-free decomposition: list of (square-free factor, multiplicity).
void squarefree(const Field& k, const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
  if (degree(f) < 1) return;
  UPoly df = derivative(k, f);
  if (df.empty()) {
    squarefree(k, pth_root(k, f), mult * static_cast<int>(k.characteristic()), out);
    return;
  }
  UPoly c = gcd(k, f, df);
  UPoly w = divmod(k, f, c).first;
  int i = 1;
  while (degree(w) >= 1) {
    UPoly y = gcd(k, w, c);
    UPoly z = divmod(k, w, y).first;
    if (degree(z) >= 1) out.push_back({monic(k, z), i * mult});
    ++i;
    w = y;
    c = divmod(k, c, y).first;
  }
  if (degree(c) >= 1) squarefree(k, pth_root(k, c), mult * static_cast<int>(k.characteristic()), out);
}

// t^q mod m
UPoly frobenius(const Field& k, const UPoly& a, const UPoly& m) { return powmod(k, a, k.size(), m); }

void equal_degree(const Field& k, const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(monic(k, f));
    return;
  }
  const bool even = k.characteristic() == 2;
  std::uniform_int_distribution<std::uint32_t> coef(0, k.size() - 1);
  while (true) {
    UPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    UPoly b;
    if (even) {
      // Absolute trace: a + a^2 + ... + a^(2^(ed-1)).
      const int steps = static_cast<int>(k.degree()) * d;
      UPoly t = mod(k, a, f);
      b = t;
      for (int i = 1; i < steps; ++i) {
        t = mod(k, mul(k, t, t), f);
        b = add(k, b, t);
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      UPoly s = mod(k, a, f), t = s;
      for (int i = 1; i < d; ++i) {
        t = frobenius(k, t, f);
        s = mod(k, mul(k, s, t), f);
      }
      b = sub(k, powmod(k, s, (k.size() - 1) / 2, f), UPoly{1});
    }
    UPoly g = gcd(k, f, b);
    if (degree(g) >= 1 && degree(g) < n) {
      equal_degree(k, g, d, rng, out);
      equal_degree(k, divmod(k, f, g).first, d, rng, out);
      return;
    }
  }
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_univariate(const Field& k, const UPoly& f_in, std::uint64_t seed) {
  UPoly f = f_in;
  trim(f);
  if (f.empty()) throw std::invalid_argument("cannot factor zero");
  std::vector<std::pair<UPoly, int>> sqf, out;
  squarefree(k, monic(k, f), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [g, mult] : sqf) {
    UPoly rest = g;
    UPoly h{0, 1};
    for (int d = 1; 2 * d <= degree(rest); ++d) {
      h = frobenius(k, h, rest);
      UPoly gd = gcd(k, rest, sub(k, h, UPoly{0, 1}));
      if (degree(gd) >= 1) {
        std::vector<UPoly> parts;
        equal_degree(k, gd, d, rng, parts);
        for (auto& p : parts) out.push_back({p, mult});
        rest = divmod(k, rest, gd).first;
        h = mod(k, h, rest);
      }
    }
    if (degree(rest) >= 1) out.push_back({monic(k, rest), mult});
  }
  // Merge equal factors (a factor can appear in several square-free layers
  // only in characteristic p through p-th roots; merging keeps output canonical).
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  std::vector<std::pair<UPoly, int>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

std::optional<Poly> divide_exact(const PolyRing& ring, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& k = ring.field();
  std::vector<Term> q;
  Poly r = f;
  while (!r.is_zero()) {
    if (!divides(g.lead().m, r.lead().m)) return std::nullopt;
    Monomial u = mono_div(r.lead().m, g.lead().m);
    Coef c = k.div(r.lead().c, g.lead().c);
    q.push_back(Term{c, u});
    r = ring.sub_mul_term(r, c, u, g);
  }
  return ring.normalize(std::move(q));
}

namespace {

constexpr std::size_t kMaxRecombine = 18;

struct Kronecker {
  int nv;
  int base;
  UPoly image(const Poly& f) const {
    UPoly u;
    for (const auto& t : f.terms()) {
      std::size_t e = 0, w = 1;
      for (int i = 0; i < nv; ++i) {
        e += t.m.exp[i] * w;
        w *= static_cast<std::size_t>(base);
      }
      if (u.size() <= e) u.resize(e + 1, 0);
      u[e] = t.c;
    }
    return u;
  }
  Poly preimage(const PolyRing& ring, const UPoly& u) const {
    std::vector<Term> terms;
    std::vector<int> exps(static_cast<std::size_t>(ring.nvars()), 0);
    for (std::size_t e = 0; e < u.size(); ++e) {
      if (!u[e]) continue;
      std::size_t rest = e;
      std::fill(exps.begin(), exps.end(), 0);
      for (int i = 0; i < nv; ++i) {
        exps[i] = static_cast<int>(rest % base);
        rest /= base;
      }
      terms.push_back(Term{u[e], ring.monomial(exps)});
    }
    return ring.normalize(std::move(terms));
  }
};

// Irreducible factors (with repetition) of a nonzero polynomial in the first
// nv variables, by Kronecker substitution and recombination.
bool factor_by_kronecker(const PolyRing& ring, Poly f, int nv, std::vector<Poly>& out) {
  const Field& k = ring.field();
  while (!f.is_zero() && !(f.lead().m.is_one())) {
    int base = 1;
    for (const auto& t : f.terms())
      for (int i = 0; i < nv; ++i) base = std::max(base, static_cast<int>(t.m.exp[i]) + 1);
    Kronecker kr{nv, base};
    auto ufac = factor_univariate(k, kr.image(f));
    std::vector<UPoly> pieces;
    for (const auto& [g, m] : ufac)
      for (int i = 0; i < m; ++i) pieces.push_back(g);
    if (pieces.size() > kMaxRecombine) return false;
    const int np = static_cast<int>(pieces.size());
    bool found = false;
    for (int size = 1; size <= np && !found; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        UPoly prod{1};
        for (int i : idx) prod = upoly::mul(k, prod, pieces[i]);
        Poly g = kr.preimage(ring, prod);
        if (!g.is_zero() && g.degree() >= 1) {
          if (auto q = divide_exact(ring, f, g)) {
            g = ring.monic(g);
            out.push_back(g);
            f = *q;
            while (auto q2 = divide_exact(ring, f, g)) {
              out.push_back(g);
              f = *q2;
            }
            found = true;
            break;
          }
        }
        int pos = size - 1;
        while (pos >= 0 && idx[pos] == np - size + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    if (!found) {
      // f itself is irreducible (its full product reproduces it up to a unit).
      out.push_back(ring.monic(f));
      break;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Poly>> homogeneous_irreducible_factors(const PolyRing& ring, const Poly& h) {
  if (h.is_zero()) throw std::invalid_argument("cannot factor zero");
  if (!h.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  const int n = ring.nvars();
  std::vector<Poly> result;
  if (h.lead().m.is_one()) return result;
  const int last = n - 1;
  // Split off powers of the last variable, then dehomogenize at it.
  int a = 0x7fff;
  for (const auto& t : h.terms()) a = std::min(a, static_cast<int>(t.m.exp[last]));
  if (a > 0) result.push_back(ring.var(last));
  std::vector<Term> deh;
  for (const auto& t : h.terms()) {
    Monomial m = t.m;
    m.exp[last] = 0;
    m.deg = ring.degree_of(m);
    m.refresh_mask();
    deh.push_back(Term{t.c, m});
  }
  Poly f = ring.normalize(std::move(deh));
  std::vector<Poly> parts;
  if (!factor_by_kronecker(ring, f, last, parts)) return std::nullopt;
  // Rehomogenize each factor and deduplicate.
  for (const auto& g : parts) {
    int d = g.degree();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.m;
      m.exp[last] = static_cast<std::uint16_t>(m.exp[last] + (d - t.m.deg) / ring.weights()[last]);
      m.deg = ring.degree_of(m);
      m.refresh_mask();
      terms.push_back(Term{t.c, m});
    }
    Poly hg = ring.monic(ring.normalize(std::move(terms)));
    if (std::find(result.begin(), result.end(), hg) == result.end()) result.push_back(hg);
  }
  return result;
}

}  // namespace cisupport
