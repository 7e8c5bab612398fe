#include "cisupport/exactalg/module_vec.hpp"

#include <algorithm>

namespace cisupport::vec {

Vec normalize(const Field& k, const ModuleOrder& ord, std::vector<VTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) { return ord.cmp(a, b) > 0; });
  Vec out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = k.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return out;
}

Vec add(const Field& k, const ModuleOrder& ord, const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coef s = k.add(a[i].c, b[j].c);
      if (s) out.push_back(VTerm{s, a[i].comp, a[i].m});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

Vec sub_mul(const Field& k, const ModuleOrder& ord, const Vec& a, Coef c, const Monomial& m, const Vec& b) {
  const Coef nc = k.neg(c);
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  VTerm tb{};
  bool have = false;
  while (true) {
    if (!have && j < b.size()) {
      tb = VTerm{k.mul(b[j].c, nc), b[j].comp, mono_mul(b[j].m, m)};
      have = true;
    }
    if (!have) {
      out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
      break;
    }
    if (i >= a.size()) {
      out.push_back(tb);
      ++j;
      have = false;
      continue;
    }
    int cmp = ord.cmp(a[i], tb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(tb);
      ++j;
      have = false;
    } else {
      Coef s = k.add(a[i].c, tb.c);
      if (s) out.push_back(VTerm{s, a[i].comp, a[i].m});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

Vec scale(const Field& k, const Vec& a, Coef c) {
  if (c == 0) return {};
  Vec out = a;
  for (auto& t : out) t.c = k.mul(t.c, c);
  return out;
}

Vec mul_term(const Field& k, const Vec& a, Coef c, const Monomial& m) {
  if (c == 0) return {};
  Vec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(VTerm{k.mul(t.c, c), t.comp, mono_mul(t.m, m)});
  return out;
}

Vec mul_poly(const PolyRing& R, const ModuleOrder& ord, const Vec& a, const Poly& f) {
  Vec acc;
  for (const auto& t : f.terms()) acc = add(R.field(), ord, acc, mul_term(R.field(), a, t.c, t.m));
  return acc;
}

Vec from_poly(const Poly& f, std::uint32_t comp) {
  Vec out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(VTerm{t.c, comp, t.m});
  return out;
}

Poly component(const Vec& a, std::uint32_t comp) {
  // Terms of one component appear in decreasing grevlex order within any
  // module order, so the extracted list is already sorted.
  std::vector<Term> terms;
  for (const auto& t : a)
    if (t.comp == comp) terms.push_back(Term{t.c, t.m});
  return Poly(std::move(terms));
}

Vec reorder(const Field& k, const ModuleOrder& ord, Vec a) { return normalize(k, ord, std::move(a)); }

bool is_homogeneous(const ModuleOrder& ord, const Vec& a) {
  for (const auto& t : a)
    if (ord.degree(t) != ord.degree(a.front())) return false;
  return true;
}

}  // namespace cisupport::vec
