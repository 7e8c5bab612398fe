#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cisupport/exactalg/poly_ring.hpp"

namespace cisupport {

/// Syntax error with a 1-based column into the parsed string.
class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& what, int column) : std::runtime_error(what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Parses sums of products such as `3*x^2*y - (y + z)^2`. Integer
/// coefficients are reduced into the ring's field; identifiers must be
/// variables of the ring.
Poly parse_poly(const PolyRing& ring, std::string_view text);

/// Canonical text: terms in decreasing grevlex order, unit coefficients
/// elided, `-` for coefficients above p/2.
std::string format_poly(const PolyRing& ring, const Poly& f);

std::string format_monomial(const PolyRing& ring, const Monomial& m);

}  // namespace cisupport
