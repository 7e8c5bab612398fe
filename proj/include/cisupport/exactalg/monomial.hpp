#pragma once

#include <array>
#include <cstdint>

namespace cisupport {

inline constexpr int kMaxVars = 16;

/// Exponent vector with cached weighted degree and a divisibility mask.
///
/// Unused trailing slots are zero. `mask` has bit i set when exp[i] >= 1 and
/// bit 16 + i set when exp[i] >= 2; a.mask & ~b.mask != 0 rules out a | b.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t deg = 0;
  std::uint32_t mask = 0;

  void refresh_mask() {
    mask = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp[i] >= 1) mask |= 1u << i;
      if (exp[i] >= 2) mask |= 1u << (16 + i);
    }
  }

  bool is_one() const { return mask == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded reverse lexicographic comparison: -1, 0, +1 for a <, ==, > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.mask & ~b.mask) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  r.mask = a.mask | b.mask;
  for (int i = 0; i < kMaxVars; ++i)
    if (r.exp[i] >= 2) r.mask |= 1u << (16 + i);
  return r;
}

/// a / b, assuming b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  r.deg = a.deg - b.deg;
  r.refresh_mask();
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask & 0xffffu) == 0; }

}  // namespace cisupport
