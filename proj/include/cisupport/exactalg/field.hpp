#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cisupport {

using Coef = std::uint32_t;

/// The finite field GF(p^e).
///
/// For e == 1 elements are residues 0..p-1. For e > 1 an element is encoded as
/// the integer whose base-p digits are the coefficients (constant term first)
/// of a polynomial in a generator t modulo a fixed primitive polynomial, so the
/// prime subfield sits inside as the encodings 0..p-1.
class Field {
 public:
  explicit Field(std::uint32_t p = 101, unsigned e = 1);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t size() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }

  Coef add(Coef a, Coef b) const {
    if (e_ == 1) {
      Coef s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Coef neg(Coef a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Coef sub(Coef a, Coef b) const { return add(a, neg(b)); }
  Coef mul(Coef a, Coef b) const {
    if (e_ == 1) return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t l = log_[a] + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
  }
  Coef inv(Coef a) const;
  Coef div(Coef a, Coef b) const { return mul(a, inv(b)); }
  Coef pow(Coef a, std::uint64_t n) const;

  /// Image of an integer under Z -> GF(p^e).
  Coef from_int(long long v) const;

  /// Generator t of the multiplicative group (e > 1), or a primitive root mod p.
  Coef generator() const;

  /// Signed representative for prime fields (values above p/2 print negative);
  /// the raw encoding for extension fields.
  std::string format(Coef a) const;

  /// Digits of the defining polynomial, constant term first (empty for e == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  Coef add_ext(Coef a, Coef b) const;
  Coef neg_ext(Coef a) const;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint32_t n);

}  // namespace cisupport
