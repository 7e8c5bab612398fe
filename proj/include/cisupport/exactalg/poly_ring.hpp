#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cisupport/exactalg/field.hpp"
#include "cisupport/exactalg/monomial.hpp"

namespace cisupport {

struct Term {
  Coef c;
  Monomial m;
};

/// Polynomial as a list of terms sorted strictly decreasing in grevlex, with
/// no zero coefficients. Arithmetic lives on PolyRing, which knows the field.
class Poly {
 public:
  Poly() = default;
  /// Takes terms that are already sorted, merged and nonzero.
  explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }

  /// Degree of the leading term (the maximum degree, grevlex being graded).
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.size() == 1 && terms_.front().m.is_one(); }
  /// Coefficient of the constant monomial.
  Coef constant_term() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const;

  Monomial monomial(std::span<const int> exps) const;
  Monomial var_monomial(int i) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  int degree_of(const Monomial& m) const;

  Poly constant(Coef c) const;
  Poly one() const { return constant(1); }
  Poly var(int i) const;
  Poly term(Coef c, const Monomial& m) const;
  /// Sorts, merges duplicates and drops zeros.
  Poly normalize(std::vector<Term> terms) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly scale(const Poly& a, Coef c) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mul_term(const Poly& a, Coef c, const Monomial& m) const;
  /// a - c * m * b
  Poly sub_mul_term(const Poly& a, Coef c, const Monomial& m, const Poly& b) const;
  Poly pow(const Poly& a, int k) const;
  Poly monic(const Poly& a) const;

  /// Evaluate at a point whose coordinates are elements of `at`, which must
  /// contain this ring's field (same characteristic; coefficients embed as-is).
  Coef evaluate(const Poly& f, std::span<const Coef> point, const Field& at) const;

  /// True when f only involves variables of this ring.
  bool owns(const Poly& f) const;

  /// Text identifying field, variables and weights; used in content hashes.
  std::string canonical() const;

  bool operator==(const PolyRing& o) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

}  // namespace cisupport
