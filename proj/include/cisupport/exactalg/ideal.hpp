#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cisupport/exactalg/groebner.hpp"

namespace cisupport {

/// Reduced Groebner basis of the ideal generated by `gens` (grevlex).
/// Throws std::invalid_argument when a generator uses variables outside `ring`.
std::vector<Poly> buchberger(const PolyRing& ring, const std::vector<Poly>& gens);

/// Remainder of f on division by a reduced basis.
Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis);

/// Ideal with a lazily computed, cached reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr ring, std::vector<Poly> gens);

  const PolyRing& ring() const { return *ring_; }
  const PolyRingPtr& ring_ptr() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const std::vector<Poly>& groebner() const;
  Poly normal_form(const Poly& f) const { return cisupport::normal_form(*ring_, f, groebner()); }
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_zero() const;
  bool is_unit() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
  };
  PolyRingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Coefficients c with f = sum c_i * gens_i, found by dividing through a
/// Groebner basis that tracks representations (division-trace witness).
///
/// Build once, query many times: the basis is computed in the constructor.
class WitnessBasis {
 public:
  WitnessBasis(const PolyRing& ring, std::vector<Poly> gens, DivisorChoice divisor = DivisorChoice::First);
  std::optional<std::vector<Poly>> witness(const Poly& f) const;
  const std::vector<Poly>& generators() const { return gens_; }

 private:
  const PolyRing& ring_;
  std::vector<Poly> gens_;
  std::unique_ptr<GroebnerEngine> engine_;
};

std::optional<std::vector<Poly>> member_witness(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gens,
                                                DivisorChoice divisor = DivisorChoice::First);

/// f vanishes on the zero set of the ideal (over the algebraic closure).
bool radical_member(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gens);

/// Krull dimension of ring/(gens); -1 for the unit ideal.
int krull_dimension(const PolyRing& ring, const std::vector<Poly>& gens);

/// Dimension of k[x_0..x_{n-1}]/(monomials): the largest set of variables
/// containing no support of a generator.
int monomial_krull_dimension(int nvars, const std::vector<Monomial>& gens);

struct RegularSequenceReport {
  bool regular = false;
  int length = 0;
  /// Images in I/nI are linearly independent (the fs minimally generate I).
  bool minimal_generators = false;
  std::string reason;
};

/// Homogeneous f_1..f_c in the square of the irrelevant ideal form a regular
/// sequence iff dim Q/(fs) = n - c. Throws on non-homogeneous input.
RegularSequenceReport check_regular_sequence(const PolyRing& ring, const std::vector<Poly>& fs);
bool is_regular_sequence(const PolyRing& ring, const std::vector<Poly>& fs);

/// Every term has at least two variable factors (membership in the square
/// of the ideal generated by the variables).
bool in_square_of_maximal(const Poly& f);

}  // namespace cisupport
