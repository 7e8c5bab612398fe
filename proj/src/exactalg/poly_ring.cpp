#include "cisupport/exactalg/poly_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cisupport {

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Coef Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].c != b.terms_[i].c || !(a.terms_[i].m == b.terms_[i].m)) return false;
  return true;
}

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw std::invalid_argument("weights must match variables");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("variable weights must be positive");
}

bool PolyRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

Monomial PolyRing::monomial(std::span<const int> exps) const {
  if (exps.size() > names_.size()) throw std::invalid_argument("exponent vector longer than variable list");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 60000) throw std::invalid_argument("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(exps[i]);
    m.deg += exps[i] * weights_[i];
  }
  m.refresh_mask();
  return m;
}

Monomial PolyRing::var_monomial(int i) const {
  Monomial m;
  m.exp[i] = 1;
  m.deg = weights_[i];
  m.refresh_mask();
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.deg += r.exp[i] * weights_[i];
  }
  r.mask = a.mask | b.mask;
  return r;
}

int PolyRing::degree_of(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += m.exp[i] * weights_[i];
  return d;
}

Poly PolyRing::constant(Coef c) const {
  if (c == 0) return {};
  return Poly({Term{c, Monomial{}}});
}

Poly PolyRing::var(int i) const { return Poly({Term{1, var_monomial(i)}}); }

Poly PolyRing::term(Coef c, const Monomial& m) const {
  if (c == 0) return {};
  return Poly({Term{c, m}});
}

Poly PolyRing::normalize(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = field_.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return Poly(std::move(out));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = grevlex_cmp(x[i].m, y[j].m);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      Coef s = field_.add(x[i].c, y[j].c);
      if (s != 0) out.push_back(Term{s, x[i].m});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  return Poly(std::move(out));
}

Poly PolyRing::neg(const Poly& a) const {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = field_.neg(t.c);
  return Poly(std::move(out));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::scale(const Poly& a, Coef c) const {
  if (c == 0) return {};
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = field_.mul(t.c, c);
  return Poly(std::move(out));
}

Poly PolyRing::mul_term(const Poly& a, Coef c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back(Term{field_.mul(t.c, c), mono_mul(t.m, m)});
  return Poly(std::move(out));
}

Poly PolyRing::sub_mul_term(const Poly& a, Coef c, const Monomial& m, const Poly& b) const {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const Coef nc = field_.neg(c);
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Term ty{};
  bool have = false;
  while (i < x.size() || j < y.size()) {
    if (!have && j < y.size()) {
      ty = Term{field_.mul(y[j].c, nc), mono_mul(y[j].m, m)};
      have = true;
    }
    if (!have) {
      out.push_back(x[i++]);
      continue;
    }
    if (i >= x.size()) {
      out.push_back(ty);
      ++j;
      have = false;
      continue;
    }
    int cmp = grevlex_cmp(x[i].m, ty.m);
    if (cmp > 0) {
      out.push_back(x[i++]);
    } else if (cmp < 0) {
      out.push_back(ty);
      ++j;
      have = false;
    } else {
      Coef s = field_.add(x[i].c, ty.c);
      if (s != 0) out.push_back(Term{s, x[i].m});
      ++i;
      ++j;
      have = false;
    }
  }
  return Poly(std::move(out));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() < b.size()) return mul(b, a);
  Poly acc;
  for (const auto& t : b.terms()) acc = add(acc, mul_term(a, t.c, t.m));
  return acc;
}

Poly PolyRing::pow(const Poly& a, int k) const {
  Poly r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.lead().c));
}

Coef PolyRing::evaluate(const Poly& f, std::span<const Coef> point, const Field& at) const {
  if (static_cast<int>(point.size()) < nvars()) throw std::invalid_argument("point has too few coordinates");
  Coef acc = 0;
  for (const auto& t : f.terms()) {
    Coef v = t.c;
    for (int i = 0; i < nvars(); ++i)
      if (t.m.exp[i]) v = at.mul(v, at.pow(point[i], t.m.exp[i]));
    acc = at.add(acc, v);
  }
  return acc;
}

bool PolyRing::owns(const Poly& f) const {
  for (const auto& t : f.terms())
    for (int i = nvars(); i < kMaxVars; ++i)
      if (t.m.exp[i]) return false;
  return true;
}

std::string PolyRing::canonical() const {
  std::ostringstream os;
  os << "p=" << field_.characteristic() << ";e=" << field_.degree() << ";vars=";
  for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << names_[i] << ":" << weights_[i];
  return os.str();
}

bool PolyRing::operator==(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
}

}  // namespace cisupport
