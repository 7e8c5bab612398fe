#include "cisupport/exactalg/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cisupport {

namespace {

void check_ring(const PolyRing& ring, const std::vector<Poly>& gens) {
  for (const auto& g : gens)
    if (!ring.owns(g)) throw std::invalid_argument("polynomial does not belong to the ring");
}

int total_exponent(const Monomial& m) {
  int s = 0;
  for (auto e : m.exp) s += e;
  return s;
}

}  // namespace

std::vector<Poly> buchberger(const PolyRing& ring, const std::vector<Poly>& gens) {
  check_ring(ring, gens);
  return reduced_groebner(ring, gens);
}

Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis) {
  if (!ring.owns(f)) throw std::invalid_argument("polynomial does not belong to the ring");
  return reduce_poly(ring, basis, f);
}

Ideal::Ideal(PolyRingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  check_ring(*ring_, gens_);
}

const std::vector<Poly>& Ideal::groebner() const {
  std::call_once(cache_->once, [&] { cache_->gb = buchberger(*ring_, gens_); });
  return cache_->gb;
}

bool Ideal::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_zero(); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().lead().m.is_one();
}

WitnessBasis::WitnessBasis(const PolyRing& ring, std::vector<Poly> gens, DivisorChoice divisor)
    : ring_(ring), gens_(std::move(gens)) {
  check_ring(ring_, gens_);
  const int c = static_cast<int>(gens_.size());
  ModuleOrder ord;
  ord.twist.push_back(0);
  ord.block.push_back(1);
  for (int i = 0; i < c; ++i) {
    ord.twist.push_back(gens_[i].is_zero() ? 0 : gens_[i].degree());
    ord.block.push_back(0);
  }
  engine_ = std::make_unique<GroebnerEngine>(ring_, ord, GroebnerOptions{false, divisor});
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  if (divisor == DivisorChoice::Last) std::reverse(order.begin(), order.end());
  for (int i : order) {
    Vec v = vec::from_poly(gens_[i], 0);
    v.push_back(VTerm{1, static_cast<std::uint32_t>(i + 1), Monomial{}});
    engine_->add_background(vec::normalize(ring_.field(), ord, std::move(v)));
  }
  engine_->run();
}

std::optional<std::vector<Poly>> WitnessBasis::witness(const Poly& f) const {
  if (!ring_.owns(f)) throw std::invalid_argument("polynomial does not belong to the ring");
  std::vector<Poly> out(gens_.size());
  if (f.is_zero()) return out;
  Vec r = engine_->reduce(vec::from_poly(f, 0), true);
  for (const auto& t : r)
    if (t.comp == 0) return std::nullopt;
  for (std::size_t i = 0; i < gens_.size(); ++i) out[i] = ring_.neg(vec::component(r, static_cast<std::uint32_t>(i + 1)));
  return out;
}

std::optional<std::vector<Poly>> member_witness(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gens,
                                                DivisorChoice divisor) {
  return WitnessBasis(ring, gens, divisor).witness(f);
}

bool radical_member(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gens) {
  check_ring(ring, gens);
  if (!ring.owns(f)) throw std::invalid_argument("polynomial does not belong to the ring");
  if (f.is_zero()) return true;
  const int n = ring.nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("radical test needs one spare variable");
  std::vector<std::string> names = ring.names();
  names.push_back("_rab");
  std::vector<int> weights = ring.weights();
  weights.push_back(1);
  PolyRing ext(ring.field(), names, weights);
  // Polynomials embed unchanged: the new variable occupies an unused slot.
  std::vector<Poly> g = gens;
  Poly yf = ext.mul(ext.var(n), f);
  g.push_back(ext.sub(ext.one(), yf));
  auto gb = reduced_groebner(ext, g);
  return gb.size() == 1 && gb.front().lead().m.is_one();
}

int monomial_krull_dimension(int nvars, const std::vector<Monomial>& gens) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : gens) {
    std::uint32_t s = m.mask & 0xffffu;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : (1u << nvars);
  for (std::uint32_t set = 0; set < full; ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const PolyRing& ring, const std::vector<Poly>& gens) {
  auto gb = buchberger(ring, gens);
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead().m);
  return monomial_krull_dimension(ring.nvars(), leads);
}

bool in_square_of_maximal(const Poly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return total_exponent(t.m) >= 2; });
}

RegularSequenceReport check_regular_sequence(const PolyRing& ring, const std::vector<Poly>& fs) {
  check_ring(ring, fs);
  RegularSequenceReport rep;
  rep.length = static_cast<int>(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_homogeneous()) throw std::invalid_argument("relation " + std::to_string(i + 1) + " is not homogeneous");
    if (fs[i].is_zero()) {
      rep.reason = "relation " + std::to_string(i + 1) + " is zero";
      return rep;
    }
    if (!in_square_of_maximal(fs[i])) {
      rep.reason = "relation " + std::to_string(i + 1) + " is not in the square of the maximal ideal";
      return rep;
    }
  }
  int dim = krull_dimension(ring, fs);
  if (dim != ring.nvars() - rep.length) {
    rep.reason = "dimension of the quotient is " + std::to_string(dim) + ", expected " +
                 std::to_string(ring.nvars() - rep.length);
    return rep;
  }
  GroebnerEngine eng(ring, ModuleOrder::graded({0}));
  for (const auto& f : fs) eng.add_generator(vec::from_poly(f, 0));
  eng.run();
  rep.minimal_generators = static_cast<int>(eng.minimal_generators().size()) == rep.length;
  rep.regular = true;
  return rep;
}

bool is_regular_sequence(const PolyRing& ring, const std::vector<Poly>& fs) {
  return check_regular_sequence(ring, fs).regular;
}

}  // namespace cisupport
