#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cisupport/exactalg/poly_text.hpp"

namespace cisupport::testing {

inline PolyRingPtr make_ring(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(Field(p), std::move(names));
}

inline Poly P(const PolyRingPtr& r, const std::string& s) { return parse_poly(*r, s); }

inline std::vector<Poly> Ps(const PolyRingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Poly> out;
  for (const auto& s : ss) out.push_back(parse_poly(*r, s));
  return out;
}

inline std::string S(const PolyRingPtr& r, const Poly& f) { return format_poly(*r, f); }

}  // namespace cisupport::testing
