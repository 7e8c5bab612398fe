#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cisupport/exactalg/ideal.hpp"

namespace cisupport {

/// A = Q / J for a graded polynomial ring Q and homogeneous relations J.
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr Q, std::vector<Poly> relations);

  const PolyRing& poly() const { return *Q_; }
  const PolyRingPtr& poly_ptr() const { return Q_; }
  const Field& field() const { return Q_->field(); }
  const std::vector<Poly>& relations() const { return relations_; }
  /// Reduced Groebner basis of J.
  const std::vector<Poly>& gb() const { return gb_; }

  int dim() const { return dim_; }
  bool artinian() const { return dim_ == 0; }
  /// Largest degree of a nonzero element (artinian rings only, else -1).
  int top_degree() const { return top_degree_; }

  Poly reduce(const Poly& f) const { return reduce_poly(*Q_, gb_, f); }

  /// Monomials of degree d outside the leading-term ideal of J, in
  /// decreasing grevlex order.
  const std::vector<Monomial>& standard_monomials(int d) const;

  /// Text identifying the ring (field, variables, weights, reduced relations).
  std::string canonical() const;

 private:
  PolyRingPtr Q_;
  std::vector<Poly> relations_;
  std::vector<Poly> gb_;
  int dim_ = 0;
  int top_degree_ = -1;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Monomial>> standard_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// Complete intersection R = Q/(f_1..f_c) with the coordinates of V = I/nI
/// fixed by the order of the f_i.
class CIRing {
 public:
  /// Validates that fs is a regular sequence in the square of the maximal ideal.
  CIRing(PolyRingPtr Q, std::vector<Poly> fs);

  const PolyRing& poly() const { return *Q_; }
  const PolyRingPtr& poly_ptr() const { return Q_; }
  const Field& field() const { return Q_->field(); }
  const std::vector<Poly>& fs() const { return fs_; }
  int codim() const { return static_cast<int>(fs_.size()); }
  int nvars() const { return Q_->nvars(); }

  const QuotientRingPtr& ring() const { return R_; }
  const QuotientRingPtr& ambient() const { return ambient_; }

  /// Polynomial ring k[chi1..chic] (standard graded).
  const PolyRingPtr& chi_ring() const { return chi_; }

  /// f = sum a_i f_i.
  Poly section(const std::vector<Coef>& a) const;
  /// Hypersurface Q/(f) for a nonzero point a of k^c.
  QuotientRingPtr hypersurface(const std::vector<Coef>& a) const;
  /// The same hypersurface over the extension field `K` (a point with
  /// coordinates in K; the base field embeds as the encodings 0..p-1).
  QuotientRingPtr hypersurface_over(const Field& K, const std::vector<Coef>& a) const;

  /// Intermediate complete intersection Q/(g_1..g_r), g_j = sum_i A_ji f_i,
  /// for a full-rank r x c coefficient matrix A.
  CIRing intermediate(const std::vector<std::vector<Coef>>& A) const;

  std::string canonical() const;

 private:
  PolyRingPtr Q_;
  std::vector<Poly> fs_;
  QuotientRingPtr R_;
  QuotientRingPtr ambient_;
  PolyRingPtr chi_;
};

/// Rank of a coefficient matrix over k.
int coefficient_rank(const Field& k, const std::vector<std::vector<Coef>>& A);

}  // namespace cisupport
