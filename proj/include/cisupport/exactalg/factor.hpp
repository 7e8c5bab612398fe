#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cisupport/exactalg/poly_ring.hpp"

namespace cisupport {

/// Dense univariate polynomial, coefficient of t^i at index i, no trailing zeros.
using UPoly = std::vector<Coef>;

namespace upoly {

void trim(UPoly& a);
int degree(const UPoly& a);
UPoly add(const Field& k, const UPoly& a, const UPoly& b);
UPoly sub(const Field& k, const UPoly& a, const UPoly& b);
UPoly mul(const Field& k, const UPoly& a, const UPoly& b);
/// (quotient, remainder)
std::pair<UPoly, UPoly> divmod(const Field& k, const UPoly& a, const UPoly& b);
UPoly mod(const Field& k, const UPoly& a, const UPoly& m);
UPoly monic(const Field& k, const UPoly& a);
UPoly gcd(const Field& k, UPoly a, UPoly b);
UPoly powmod(const Field& k, UPoly base, std::uint64_t e, const UPoly& m);
UPoly derivative(const Field& k, const UPoly& a);

}  // namespace upoly

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// The randomized splitting step is driven by `seed`, so output is reproducible.
std::vector<std::pair<UPoly, int>> factor_univariate(const Field& k, const UPoly& f, std::uint64_t seed = 1);

/// q with f = q * g, or nothing when g does not divide f.
std::optional<Poly> divide_exact(const PolyRing& ring, const Poly& f, const Poly& g);

/// Distinct irreducible factors (monic) of a nonzero homogeneous polynomial
/// over the coefficient field. Empty optional when the factor search exceeds
/// its combinatorial budget.
std::optional<std::vector<Poly>> homogeneous_irreducible_factors(const PolyRing& ring, const Poly& h);

}  // namespace cisupport
