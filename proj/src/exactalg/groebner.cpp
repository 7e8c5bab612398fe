#include "cisupport/exactalg/groebner.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace cisupport {

namespace {

// out = a[start:] - c * m * b
Vec merge_sub(const Field& k, const ModuleOrder& ord, const Vec& a, std::size_t start, Coef c, const Monomial& m,
              const Vec& b) {
  const Coef nc = k.neg(c);
  Vec out;
  out.reserve(a.size() - start + b.size());
  std::size_t i = start, j = 0;
  while (i < a.size() && j < b.size()) {
    VTerm tb{k.mul(b[j].c, nc), b[j].comp, mono_mul(b[j].m, m)};
    int cmp = ord.cmp(a[i], tb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(tb);
      ++j;
    } else {
      Coef s = k.add(a[i].c, tb.c);
      if (s) out.push_back(VTerm{s, a[i].comp, a[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(VTerm{k.mul(b[j].c, nc), b[j].comp, mono_mul(b[j].m, m)});
  return out;
}

}  // namespace

GroebnerEngine::GroebnerEngine(const PolyRing& ring, ModuleOrder order, GroebnerOptions opts)
    : ring_(ring), order_(std::move(order)), opts_(opts) {
  if (order_.block.size() != order_.twist.size()) throw std::invalid_argument("module order: block/twist mismatch");
  by_comp_.resize(order_.twist.size());
}

void GroebnerEngine::add_background(Vec v) {
  if (done_) throw std::logic_error("groebner engine already ran");
  if (v.empty()) return;
  int d = order_.degree(v.front());
  pending_.push_back(Pending{std::move(v), d, -1});
}

int GroebnerEngine::add_generator(Vec v) {
  if (done_) throw std::logic_error("groebner engine already ran");
  int idx = static_cast<int>(minimal_.size());
  minimal_.push_back(0);
  if (!v.empty()) {
    int d = order_.degree(v.front());
    pending_.push_back(Pending{std::move(v), d, idx});
  }
  return idx;
}

std::vector<int> GroebnerEngine::minimal_generators() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(minimal_.size()); ++i)
    if (minimal_[i]) out.push_back(i);
  return out;
}

int GroebnerEngine::find_divisor(const VTerm& t) const {
  const auto& cand = by_comp_[t.comp];
  if (opts_.divisor == DivisorChoice::First) {
    for (int idx : cand)
      if (divides(basis_[idx].front().m, t.m)) return idx;
  } else {
    for (auto it = cand.rbegin(); it != cand.rend(); ++it)
      if (divides(basis_[*it].front().m, t.m)) return *it;
  }
  return -1;
}

Vec GroebnerEngine::reduce_top(Vec v) const {
  const Field& k = ring_.field();
  while (!v.empty()) {
    int idx = find_divisor(v.front());
    if (idx < 0) break;
    const Vec& g = basis_[idx];
    Monomial u = mono_div(v.front().m, g.front().m);
    Coef c = k.div(v.front().c, g.front().c);
    v = merge_sub(k, order_, v, 0, c, u, g);
  }
  return v;
}

Vec GroebnerEngine::reduce(Vec v, bool full) const {
  if (!full) return reduce_top(std::move(v));
  const Field& k = ring_.field();
  Vec done;
  std::size_t start = 0;
  while (start < v.size()) {
    int idx = find_divisor(v[start]);
    if (idx < 0) {
      done.push_back(v[start]);
      ++start;
      continue;
    }
    const Vec& g = basis_[idx];
    Monomial u = mono_div(v[start].m, g.front().m);
    Coef c = k.div(v[start].c, g.front().c);
    v = merge_sub(k, order_, v, start, c, u, g);
    start = 0;
  }
  return done;
}

Vec GroebnerEngine::spair(const Pair& p) const {
  const Vec& a = basis_[p.i];
  const Vec& b = basis_[p.j];
  Monomial ua = mono_div(p.lcm, a.front().m);
  Monomial ub = mono_div(p.lcm, b.front().m);
  // basis elements are monic
  Vec left = vec::mul_term(ring_.field(), a, 1, ua);
  return merge_sub(ring_.field(), order_, left, 0, 1, ub, b);
}

void GroebnerEngine::insert(Vec v) {
  const Field& k = ring_.field();
  if (v.front().c != 1) v = vec::scale(k, v, k.inv(v.front().c));
  int h = static_cast<int>(basis_.size());
  bool single = std::all_of(v.begin(), v.end(), [&](const VTerm& t) { return t.comp == v.front().comp; });
  single_comp_.push_back(single ? 1 : 0);
  std::uint32_t comp = v.front().comp;
  basis_.push_back(std::move(v));
  update_pairs(h);
  by_comp_[comp].push_back(h);
}

void GroebnerEngine::update_pairs(int h) {
  const VTerm& lh = basis_[h].front();
  const std::uint32_t comp = lh.comp;

  // Chain criterion on pending pairs.
  for (auto& p : pairs_) {
    if (!p.alive) continue;
    if (basis_[p.i].front().comp != comp) continue;
    if (!divides(lh.m, p.lcm)) continue;
    Monomial lih = ring_.lcm(basis_[p.i].front().m, lh.m);
    Monomial ljh = ring_.lcm(basis_[p.j].front().m, lh.m);
    if (!(lih == p.lcm) && !(ljh == p.lcm)) p.alive = false;
  }

  struct Cand {
    int i;
    Monomial lcm;
    bool product;
  };
  std::vector<Cand> cands;
  for (int i : by_comp_[comp]) {
    const VTerm& li = basis_[i].front();
    bool product = single_comp_[i] && single_comp_[h] && coprime(li.m, lh.m);
    cands.push_back(Cand{i, ring_.lcm(li.m, lh.m), product});
  }
  std::vector<char> in_c(cands.size(), 1), in_d(cands.size(), 0);
  for (std::size_t a = 0; a < cands.size(); ++a) {
    in_c[a] = 0;
    bool keep = cands[a].product;
    if (!keep) {
      keep = true;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (b == a || !(in_c[b] || in_d[b])) continue;
        if (divides(cands[b].lcm, cands[a].lcm)) {
          keep = false;
          break;
        }
      }
    }
    if (keep) in_d[a] = 1;
  }
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!in_d[a] || cands[a].product) continue;
    int deg = cands[a].lcm.deg + order_.twist[comp];
    pairs_.push_back(Pair{cands[a].i, h, cands[a].lcm, deg, true});
  }
}

void GroebnerEngine::run() {
  if (done_) return;
  done_ = true;
  while (true) {
    int d = INT_MAX;
    for (const auto& p : pairs_)
      if (p.alive) d = std::min(d, p.degree);
    for (const auto& q : pending_) d = std::min(d, q.degree);
    if (d == INT_MAX) break;

    std::vector<std::size_t> batch;
    for (std::size_t t = 0; t < pairs_.size(); ++t)
      if (pairs_[t].alive && pairs_[t].degree == d) batch.push_back(t);
    std::sort(batch.begin(), batch.end(), [&](std::size_t a, std::size_t b) {
      int c = grevlex_cmp(pairs_[a].lcm, pairs_[b].lcm);
      if (c) return c < 0;
      if (pairs_[a].j != pairs_[b].j) return pairs_[a].j < pairs_[b].j;
      return pairs_[a].i < pairs_[b].i;
    });
    for (std::size_t t : batch) {
      if (!pairs_[t].alive) continue;
      pairs_[t].alive = false;
      Pair p = pairs_[t];
      Vec s = reduce_top(spair(p));
      if (!s.empty()) insert(std::move(s));
    }

    std::vector<Pending> rest;
    std::vector<Pending> now_bg, now_user;
    for (auto& q : pending_) {
      if (q.degree != d)
        rest.push_back(std::move(q));
      else if (q.user_index < 0)
        now_bg.push_back(std::move(q));
      else
        now_user.push_back(std::move(q));
    }
    pending_ = std::move(rest);
    for (auto& q : now_bg) {
      Vec r = reduce_top(std::move(q.v));
      if (!r.empty()) insert(std::move(r));
    }
    for (auto& q : now_user) {
      Vec r = reduce_top(std::move(q.v));
      if (!r.empty()) {
        minimal_[q.user_index] = 1;
        insert(std::move(r));
      }
    }

    if (pairs_.size() > 4096) {
      std::size_t alive = 0;
      for (const auto& p : pairs_) alive += p.alive;
      if (alive * 2 < pairs_.size()) {
        std::vector<Pair> kept;
        kept.reserve(alive);
        for (const auto& p : pairs_)
          if (p.alive) kept.push_back(p);
        pairs_ = std::move(kept);
      }
    }
  }
  pairs_.clear();
  if (opts_.reduce) interreduce();
}

void GroebnerEngine::interreduce() {
  const int n = static_cast<int>(basis_.size());
  std::vector<char> keep(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const VTerm& li = basis_[i].front();
      const VTerm& lj = basis_[j].front();
      if (li.comp != lj.comp || !divides(lj.m, li.m)) continue;
      if (!(lj.m == li.m) || j < i) keep[i] = 0;
    }
  }
  std::vector<Vec> kept;
  for (int i = 0; i < n; ++i)
    if (keep[i]) kept.push_back(std::move(basis_[i]));
  std::sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) { return order_.cmp(a.front(), b.front()) > 0; });

  basis_ = std::move(kept);
  single_comp_.assign(basis_.size(), 0);
  for (auto& lst : by_comp_) lst.clear();
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) by_comp_[basis_[i].front().comp].push_back(i);

  // Tail reduction: leads are pairwise non-divisible, so reducing the tail of
  // one element by the whole basis never touches its own lead.
  const Field& k = ring_.field();
  for (auto& g : basis_) {
    VTerm lead = g.front();
    Vec tail(g.begin() + 1, g.end());
    tail = reduce(std::move(tail), true);
    Vec out;
    out.reserve(tail.size() + 1);
    out.push_back(lead);
    out.insert(out.end(), tail.begin(), tail.end());
    if (out.front().c != 1) out = vec::scale(k, out, k.inv(out.front().c));
    g = std::move(out);
  }
}

std::vector<Vec> GroebnerEngine::elements_in_block(int b) const {
  const int n = static_cast<int>(basis_.size());
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) {
    const VTerm& li = basis_[i].front();
    if (order_.block[li.comp] != b) continue;
    bool redundant = false;
    for (int j : by_comp_[li.comp]) {
      if (j == i) continue;
      const VTerm& lj = basis_[j].front();
      if (divides(lj.m, li.m) && (!(lj.m == li.m) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(basis_[i]);
  }
  return out;
}

std::vector<Poly> reduced_groebner(const PolyRing& ring, const std::vector<Poly>& gens, DivisorChoice divisor) {
  GroebnerEngine eng(ring, ModuleOrder::graded({0}), GroebnerOptions{true, divisor});
  for (const auto& g : gens) {
    if (!ring.owns(g)) throw std::invalid_argument("generator does not belong to the ring");
    eng.add_background(vec::from_poly(g, 0));
  }
  eng.run();
  std::vector<Poly> out;
  for (const auto& v : eng.basis()) out.push_back(vec::component(v, 0));
  return out;
}

Poly reduce_poly(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f) {
  const Field& k = ring.field();
  std::vector<Term> done;
  Poly cur = f;
  while (!cur.is_zero()) {
    const Term& lt = cur.lead();
    const Poly* div = nullptr;
    for (const auto& g : gb)
      if (divides(g.lead().m, lt.m)) {
        div = &g;
        break;
      }
    if (!div) {
      done.push_back(lt);
      auto& terms = cur.mutable_terms();
      terms.erase(terms.begin());
      continue;
    }
    Monomial u = mono_div(lt.m, div->lead().m);
    Coef c = k.div(lt.c, div->lead().c);
    cur = ring.sub_mul_term(cur, c, u, *div);
  }
  return Poly(std::move(done));
}

}  // namespace cisupport
