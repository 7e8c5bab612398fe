#pragma once

#include <cstdint>
#include <vector>

#include "cisupport/exactalg/poly_ring.hpp"

namespace cisupport {

/// Term c * m * e_comp of a free module.
struct VTerm {
  Coef c;
  std::uint32_t comp;
  Monomial m;
};

/// Element of a free module, terms sorted strictly decreasing in the
/// module order that was used to build it.
using Vec = std::vector<VTerm>;

/// Monomial order on a graded free module: block (larger dominates), then
/// total degree (monomial degree + basis twist), then grevlex, then
/// component index (smaller index is larger). With two blocks this is an
/// elimination order for the low block.
struct ModuleOrder {
  std::vector<int> twist;
  std::vector<int> block;

  static ModuleOrder graded(std::vector<int> twists) {
    ModuleOrder o;
    o.block.assign(twists.size(), 0);
    o.twist = std::move(twists);
    return o;
  }

  int rank() const { return static_cast<int>(twist.size()); }

  int cmp(const VTerm& a, const VTerm& b) const {
    int ba = block[a.comp], bb = block[b.comp];
    if (ba != bb) return ba > bb ? 1 : -1;
    int da = a.m.deg + twist[a.comp], db = b.m.deg + twist[b.comp];
    if (da != db) return da > db ? 1 : -1;
    int c = grevlex_cmp(a.m, b.m);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  int degree(const VTerm& t) const { return t.m.deg + twist[t.comp]; }
};

namespace vec {

Vec normalize(const Field& k, const ModuleOrder& ord, std::vector<VTerm> terms);
Vec add(const Field& k, const ModuleOrder& ord, const Vec& a, const Vec& b);
/// a - c * m * b
Vec sub_mul(const Field& k, const ModuleOrder& ord, const Vec& a, Coef c, const Monomial& m, const Vec& b);
Vec scale(const Field& k, const Vec& a, Coef c);
Vec mul_term(const Field& k, const Vec& a, Coef c, const Monomial& m);
Vec mul_poly(const PolyRing& R, const ModuleOrder& ord, const Vec& a, const Poly& f);
Vec from_poly(const Poly& f, std::uint32_t comp);
/// Component `comp` of a as a polynomial.
Poly component(const Vec& a, std::uint32_t comp);
/// Re-sort under another order (e.g. after shifting components).
Vec reorder(const Field& k, const ModuleOrder& ord, Vec a);
bool is_homogeneous(const ModuleOrder& ord, const Vec& a);

}  // namespace vec

}  // namespace cisupport
