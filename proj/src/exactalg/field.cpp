#include "cisupport/exactalg/field.hpp"

#include <stdexcept>

namespace cisupport {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Multiply two digit vectors (length e) modulo the monic modulus of degree e.
std::vector<std::uint32_t> mulmod_digits(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b,
                                         const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i)
      prod[k - e + i] = (prod[k - e + i] + (p - modulus[i]) % p * c) % p;
  }
  std::vector<std::uint32_t> out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

Field::Field(std::uint32_t p, unsigned e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p) || p > 32749) throw std::invalid_argument("field characteristic must be a prime <= 32749");
  if (e < 1 || e > 3) throw std::invalid_argument("extension degree must be 1, 2 or 3");
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  if (q_ > (1u << 21)) throw std::invalid_argument("extension field too large");

  if (e_ == 1) {
    inv_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a) {
      if (inv_[a] != 0) continue;
      // extended Euclid
      long long r0 = p_, r1 = a, s0 = 0, s1 = 1;
      while (r1 != 0) {
        long long qt = r0 / r1;
        long long t = r0 - qt * r1;
        r0 = r1;
        r1 = t;
        t = s0 - qt * s1;
        s0 = s1;
        s1 = t;
      }
      long long v = s0 % static_cast<long long>(p_);
      if (v < 0) v += p_;
      inv_[a] = static_cast<std::uint32_t>(v);
      inv_[v] = a;
    }
    return;
  }

  // Search the lexicographically smallest monic polynomial of degree e for
  // which t generates the multiplicative group; such a polynomial is
  // irreducible and gives log/exp tables directly.
  const std::uint32_t order = q_ - 1;
  std::vector<std::uint32_t> tail(e_, 0);
  for (std::uint32_t code = 0; code < q_; ++code) {
    std::uint32_t c = code;
    for (unsigned i = 0; i < e_; ++i) {
      tail[i] = c % p_;
      c /= p_;
    }
    if (tail[0] == 0) continue;
    std::vector<std::uint32_t> modulus(tail);
    modulus.push_back(1);
    std::vector<std::uint32_t> t(e_, 0);
    t[1 % e_] = 1;
    std::vector<std::uint32_t> cur(e_, 0);
    cur[0] = 1;
    std::vector<std::uint32_t> exps(order);
    std::vector<char> seen(q_, 0);
    bool primitive = true;
    for (std::uint32_t k = 0; k < order; ++k) {
      std::uint32_t enc = encode(cur, p_);
      if (seen[enc] || enc == 0) {
        primitive = false;
        break;
      }
      seen[enc] = 1;
      exps[k] = enc;
      cur = mulmod_digits(cur, t, modulus, p_);
    }
    if (!primitive) continue;
    modulus_ = modulus;
    exp_ = std::move(exps);
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;
    return;
  }
  throw std::logic_error("no primitive polynomial found");
}

Coef Field::add_ext(Coef a, Coef b) const {
  Coef out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    Coef da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    Coef s = da + db;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
  }
  return out;
}

Coef Field::neg_ext(Coef a) const {
  Coef out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    Coef d = a % p_;
    a /= p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
  }
  return out;
}

Coef Field::inv(Coef a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  if (e_ == 1) return inv_[a];
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Coef Field::pow(Coef a, std::uint64_t n) const {
  Coef r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Coef Field::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Coef>(m);
}

Coef Field::generator() const {
  if (e_ > 1) return exp_[1 % (q_ - 1)];
  for (Coef g = 1; g < p_; ++g) {
    bool ok = true;
    Coef x = 1;
    for (std::uint32_t k = 1; k < p_ - 1; ++k) {
      x = mul(x, g);
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

std::string Field::format(Coef a) const {
  if (e_ > 1) return std::to_string(a);
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

}  // namespace cisupport
