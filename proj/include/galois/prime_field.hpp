#ifndef GALOIS_PRIME_FIELD_HPP
#define GALOIS_PRIME_FIELD_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace galois {

class Fp;

/// An odd or even prime p < 2^31, validated by trial division on construction.
///
/// Also serves as the field policy for BasicPolynomial: it hands out zero(),
/// one() and element(v) for coefficient construction.
class PrimeModulus
{
public:
  using element_type = Fp;

  explicit PrimeModulus(std::int64_t p)
  {
    if (p < 2 || p >= (std::int64_t{1} << 31))
      throw NotPrime(std::to_string(p) + " is outside [2, 2^31)");
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0)
        throw NotPrime(std::to_string(p) + " is divisible by " + std::to_string(d));
    }
    p_ = static_cast<std::uint32_t>(p);
  }

  std::uint32_t value() const noexcept { return p_; }

  Fp zero() const;
  Fp one() const;
  Fp element(std::int64_t v) const;

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
  std::uint32_t p_ = 2;
};

/// A residue modulo p kept in canonical range [0, p).
class Fp
{
public:
  Fp(std::int64_t v, PrimeModulus m) : modulus_(m)
  {
    auto p = static_cast<std::int64_t>(m.value());
    v %= p;
    if (v < 0)
      v += p;
    value_ = static_cast<std::uint32_t>(v);
  }

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Symmetric representative in (-p/2, p/2], handy for printing signed entries.
  std::int64_t signed_value() const noexcept
  {
    auto p = static_cast<std::int64_t>(modulus_.value());
    auto v = static_cast<std::int64_t>(value_);
    return 2 * v > p ? v - p : v;
  }

  Fp operator+(Fp rhs) const
  {
    assert(modulus_ == rhs.modulus_);
    std::uint64_t s = std::uint64_t{value_} + rhs.value_;
    if (s >= modulus_.value())
      s -= modulus_.value();
    return raw(static_cast<std::uint32_t>(s), modulus_);
  }

  Fp operator-(Fp rhs) const
  {
    assert(modulus_ == rhs.modulus_);
    std::uint64_t s = std::uint64_t{value_} + modulus_.value() - rhs.value_;
    if (s >= modulus_.value())
      s -= modulus_.value();
    return raw(static_cast<std::uint32_t>(s), modulus_);
  }

  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_.value() - value_, modulus_); }

  Fp operator*(Fp rhs) const
  {
    assert(modulus_ == rhs.modulus_);
    return raw(static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % modulus_.value()),
               modulus_);
  }

  Fp operator/(Fp rhs) const { return *this * rhs.inverse(); }

  Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
  Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
  Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

  /// Multiplicative inverse via the extended Euclidean algorithm.
  Fp inverse() const
  {
    if (value_ == 0)
      throw ZeroInverse("0 has no inverse mod " + std::to_string(modulus_.value()));
    std::int64_t r0 = modulus_.value(), r1 = value_;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    return Fp(s0, modulus_);
  }

  /// Square-and-multiply; negative exponents invert first.
  Fp pow(std::int64_t e) const
  {
    Fp base = *this;
    if (e < 0) {
      base = base.inverse();
      e = -e;
    }
    Fp acc = raw(1 % modulus_.value(), modulus_);
    while (e > 0) {
      if (e & 1)
        acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Fp&, const Fp&) = default;

  // Ordering by value only; elements of different fields are never compared.
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) noexcept
  {
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value_; }

private:
  static Fp raw(std::uint32_t v, PrimeModulus m)
  {
    Fp r(0, m);
    r.value_ = v;
    return r;
  }

  std::uint32_t value_ = 0;
  PrimeModulus modulus_;
};

inline Fp PrimeModulus::zero() const { return Fp(0, *this); }
inline Fp PrimeModulus::one() const { return Fp(1, *this); }
inline Fp PrimeModulus::element(std::int64_t v) const { return Fp(v, *this); }

inline Fp fp_inv(Fp a) { return a.inverse(); }
inline Fp fp_pow(Fp a, std::int64_t e) { return a.pow(e); }

/// Distinct prime divisors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

/// Smallest generator of the multiplicative group of F_p.
inline Fp primitive_element(PrimeModulus p)
{
  const std::uint32_t q = p.value();
  if (q == 2)
    return p.one();
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t g = 2; g < q; ++g) {
    Fp cand(g, p);
    bool ok = true;
    for (auto f : factors) {
      if (cand.pow(static_cast<std::int64_t>((q - 1) / f)) == p.one()) {
        ok = false;
        break;
      }
    }
    if (ok)
      return cand;
  }
  throw NotFound("no primitive element mod " + std::to_string(q));
}

} // namespace galois

template <>
struct std::hash<galois::Fp>
{
  std::size_t operator()(const galois::Fp& a) const noexcept
  {
    return std::hash<std::uint64_t>{}((std::uint64_t{a.modulus().value()} << 32) | a.value());
  }
};

#endif
