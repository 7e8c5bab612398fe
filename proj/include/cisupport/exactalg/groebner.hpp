#pragma once

#include <vector>

#include "cisupport/exactalg/module_vec.hpp"

namespace cisupport {

enum class DivisorChoice { First, Last };

struct GroebnerOptions {
  /// Leave the basis fully inter-reduced, monic and sorted by decreasing lead.
  bool reduce = false;
  DivisorChoice divisor = DivisorChoice::First;
};

/// Buchberger's algorithm for submodules of a graded free module (ideals are
/// the rank-one case), with Gebauer-Moeller pair pruning and the normal
/// selection strategy.
///
/// Pending work is handled in increasing degree: S-pairs first, then
/// background elements, then user generators. For homogeneous input this makes
/// every user generator that survives reduction a minimal generator of the
/// submodule spanned by background plus user elements, which is how minimal
/// generating sets are extracted. Non-homogeneous input is accepted (used by
/// the radical test); minimality flags are then meaningless.
class GroebnerEngine {
 public:
  GroebnerEngine(const PolyRing& ring, ModuleOrder order, GroebnerOptions opts = {});

  void add_background(Vec v);
  /// Returns the index used by is_minimal().
  int add_generator(Vec v);

  void run();

  const std::vector<Vec>& basis() const { return basis_; }
  const ModuleOrder& order() const { return order_; }
  const PolyRing& ring() const { return ring_; }

  bool is_minimal(int generator) const { return minimal_[generator] != 0; }
  std::vector<int> minimal_generators() const;

  /// Remainder of division by the basis; `full` also reduces the tail.
  Vec reduce(Vec v, bool full = true) const;
  bool reduces_to_zero(const Vec& v) const { return reduce(v, false).empty(); }

  /// Basis elements whose lead lies in block `b` (e.g. the syzygy part of an
  /// elimination basis). Only elements with minimal leads are returned.
  std::vector<Vec> elements_in_block(int b) const;

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
    bool alive;
  };
  struct Pending {
    Vec v;
    int degree;
    int user_index;  // -1 for background
  };

  int find_divisor(const VTerm& t) const;
  Vec reduce_top(Vec v) const;
  Vec spair(const Pair& p) const;
  void insert(Vec v);
  void update_pairs(int h);
  void interreduce();

  const PolyRing& ring_;
  ModuleOrder order_;
  GroebnerOptions opts_;
  std::vector<Vec> basis_;
  std::vector<char> single_comp_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Pair> pairs_;
  std::vector<Pending> pending_;
  std::vector<char> minimal_;
  bool done_ = false;
};

/// Convenience wrapper: reduced Groebner basis of an ideal.
std::vector<Poly> reduced_groebner(const PolyRing& ring, const std::vector<Poly>& gens,
                                   DivisorChoice divisor = DivisorChoice::First);

/// Remainder of f modulo a Groebner basis of an ideal (full reduction).
Poly reduce_poly(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f);

}  // namespace cisupport
