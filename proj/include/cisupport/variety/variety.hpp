#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cisupport/eisenbud/operators.hpp"

namespace cisupport {

/// Cone in V = I/nI, cut out by a homogeneous ideal of k[chi_1..chi_c].
struct SupportVariety {
  PolyRingPtr chi;
  /// Reduced Groebner basis of the ideal (empty: the whole space).
  std::vector<Poly> ideal;
  int window_used = 0;
  int degree_bound = 0;
  bool stabilized = false;
};

struct VarietyOptions {
  /// Ext window; -1 means 2(n + c) + 4.
  int window = -1;
  /// Largest chi-degree of annihilating forms; -1 means n + c.
  int degree_bound = -1;
  DivisorChoice divisor = DivisorChoice::First;
};

int default_window(const CIRing& ci);
int default_degree_bound(const CIRing& ci);

/// Module of the complete intersection seen over the hypersurface A = Q/(f)
/// (presentation plus all f_j multiples of the generators). A may be defined
/// over an extension of the base field.
GradedModule over_hypersurface(const CIRing& ci, const GradedModule& M, const QuotientRingPtr& A);

/// Whether a lies in V_R(M, N): Ext^i over Q/(sum a_j f_j) is nonzero for
/// infinitely many i, decided at i = dim A + 2 and dim A + 3. The zero point
/// is always a member. `K` names an extension field the point lives in.
bool membership(const CIRing& ci, const GradedModule& M, const GradedModule& N, const std::vector<Coef>& a,
                const Field* K = nullptr);

/// All points of k^c (or the nonzero ones) in a fixed order: the first
/// coordinate varies slowest.
std::vector<std::vector<Coef>> all_points(const Field& k, int c, bool include_zero = true);

/// Forms of chi-degree 1..D annihilating every element of E in the window,
/// as a reduced Groebner basis in `chi`.
std::vector<Poly> annihilator_ideal(const ExtKModule& E, const PolyRing& chi, int degree_bound);

/// Generators of E as a k[chi]-module inside its window: (degree, vector).
std::vector<std::pair<int, std::vector<Coef>>> ext_generators(const ExtKModule& E);

/// Copy of E restricted to degrees [0, w].
ExtKModule truncate(const ExtKModule& E, int w);

/// Annihilator of Ext(M, k), with the stabilization check at window + 2.
SupportVariety variety_of(const CIRing& ci, const GradedModule& M, const VarietyOptions& opt = {});

/// Sum of the two varieties' ideals, short-circuiting N = k and N = M.
SupportVariety variety_of_pair(const CIRing& ci, const GradedModule& M, const GradedModule& N,
                               const VarietyOptions& opt = {});

bool ideal_vanishes_at(const PolyRing& chi, const std::vector<Poly>& ideal, const std::vector<Coef>& a,
                       const Field* K = nullptr);

/// Same zero set: every generator of each lies in the radical of the other.
bool equal_up_to_radical(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);
/// Zero set of a contains the zero set of b (a subset of sqrt(b)).
bool radical_contains(const PolyRing& ring, const std::vector<Poly>& b, const std::vector<Poly>& a);

std::vector<Poly> ideal_sum(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);
std::vector<Poly> ideal_product(const PolyRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);

/// Intersection of cones (ideal sum) and union (ideal product).
SupportVariety intersect(const SupportVariety& a, const SupportVariety& b);
SupportVariety unite(const SupportVariety& a, const SupportVariety& b);

/// Linear substitution chi_i -> sum_j s_j A_ji into every generator. The
/// result lives in `target` (r variables); the default is k[s1..sr].
std::vector<Poly> restrict_to_subspace(const SupportVariety& V, const std::vector<std::vector<Coef>>& A,
                                       PolyRingPtr target = nullptr);

/// Image of a polynomial under a linear change of variables x_i -> sum_j M_ij y_j.
Poly substitute_linear(const PolyRing& from, const PolyRing& to, const Poly& f,
                       const std::vector<std::vector<Coef>>& images);

int dimension(const SupportVariety& V);

struct ComplexityEstimate {
  int complexity = 0;
  bool reliable = false;
};

/// Polynomial growth order of the Betti numbers, read from finite
/// differences of the even and odd subsequences of the tail.
ComplexityEstimate complexity_estimate(const BettiTable& betti, int skip = 0);

enum class Irreducibility { Yes, No, Unknown };
std::string to_string(Irreducibility v);

/// Irreducibility over k when the radical is principal (or linear).
Irreducibility irreducible_principal(const SupportVariety& V);

}  // namespace cisupport
