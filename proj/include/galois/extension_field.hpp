#ifndef GALOIS_EXTENSION_FIELD_HPP
#define GALOIS_EXTENSION_FIELD_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>

#include "polynomial.hpp"

namespace galois {

// Only the implicitization code needs GF(p^e); it uses it to find
// interpolation nodes and generic lines that F_p itself is too small to supply.

inline constexpr int kMaxExtensionDegree = 16;

struct ExtensionData
{
  std::uint32_t p = 2;
  int degree = 1;
  // x^degree + sum modulus[j] x^j is the defining (monic, irreducible) polynomial.
  std::array<std::uint32_t, kMaxExtensionDegree> modulus{};
  // (p - modulus[j]) mod p, the reduction rule for z^degree.
  std::array<std::uint32_t, kMaxExtensionDegree> negated{};
  std::uint64_t order = 2;
};

class ExtElement
{
public:
  using Coeffs = std::array<std::uint32_t, kMaxExtensionDegree>;

  ExtElement(const ExtensionData* ctx, const Coeffs& c) : ctx_(ctx), c_(c) {}

  const Coeffs& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept
  {
    for (int i = 0; i < ctx_->degree; ++i) {
      if (c_[i] != 0)
        return false;
    }
    return true;
  }

  ExtElement operator+(const ExtElement& o) const
  {
    Coeffs r{};
    const std::uint32_t p = ctx_->p;
    for (int i = 0; i < ctx_->degree; ++i)
      r[i] = static_cast<std::uint32_t>((std::uint64_t{c_[i]} + o.c_[i]) % p);
    return {ctx_, r};
  }

  ExtElement operator-() const
  {
    Coeffs r{};
    for (int i = 0; i < ctx_->degree; ++i)
      r[i] = c_[i] == 0 ? 0 : ctx_->p - c_[i];
    return {ctx_, r};
  }

  ExtElement operator-(const ExtElement& o) const { return *this + (-o); }

  ExtElement operator*(const ExtElement& o) const
  {
    const int e = ctx_->degree;
    const std::uint64_t p = ctx_->p;
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
    if (p < (std::uint64_t{1} << 28)) {
      // Products stay below 2^56, so sums of up to 2 * 16 of them cannot overflow:
      // reduce once per coefficient instead of once per product.
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          t[i + j] += std::uint64_t{c_[i]} * o.c_[j];
      for (int k = 2 * e - 2; k >= e; --k) {
        const std::uint64_t top = t[k] % p;
        if (top != 0)
          for (int j = 0; j < e; ++j)
            t[k - e + j] += top * ctx_->negated[j];
      }
      Coeffs r{};
      for (int i = 0; i < e; ++i)
        r[i] = static_cast<std::uint32_t>(t[i] % p);
      return {ctx_, r};
    }
    for (int i = 0; i < e; ++i) {
      if (c_[i] == 0)
        continue;
      for (int j = 0; j < e; ++j)
        t[i + j] = (t[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
    }
    for (int k = 2 * e - 2; k >= e; --k) {
      const std::uint64_t top = t[k];
      if (top == 0)
        continue;
      for (int j = 0; j < e; ++j)
        t[k - e + j] = (t[k - e + j] + top * ctx_->negated[j]) % p;
      t[k] = 0;
    }
    Coeffs r{};
    for (int i = 0; i < e; ++i)
      r[i] = static_cast<std::uint32_t>(t[i]);
    return {ctx_, r};
  }

  ExtElement pow(std::uint64_t n) const
  {
    Coeffs one{};
    one[0] = 1 % ctx_->p;
    ExtElement acc(ctx_, one), base = *this;
    while (n > 0) {
      if (n & 1)
        acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  ExtElement inverse() const
  {
    if (is_zero())
      throw ZeroInverse("0 has no inverse in GF(p^e)");
    // Extended Euclid on (m, x) in F_p[z]: keeps s with s * x = r (mod m).
    const PrimeModulus pm(ctx_->p);
    const int e = ctx_->degree;
    std::vector<Fp> mc, xc;
    for (int j = 0; j < e; ++j) {
      mc.emplace_back(ctx_->modulus[j], pm);
      xc.emplace_back(c_[j], pm);
    }
    mc.push_back(pm.one());
    Polynomial r0(pm, mc), r1(pm, xc);
    Polynomial s0(pm), s1 = Polynomial::constant(pm, pm.one());
    while (r1.degree() > 0) {
      auto [q, r] = divmod(r0, r1);
      auto s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    const auto inv = s1.scaled(r1.coeff(0).inverse());
    Coeffs out{};
    for (int j = 0; j < e; ++j)
      out[j] = inv.coeff(static_cast<std::size_t>(j)).value();
    return {ctx_, out};
  }

  ExtElement operator/(const ExtElement& o) const { return *this * o.inverse(); }

  /// The unique p-th root (inverse Frobenius).
  ExtElement pth_root() const
  {
    ExtElement r = *this;
    for (int i = 1; i < ctx_->degree; ++i)
      r = r.pow(ctx_->p);
    return r;
  }

  friend bool operator==(const ExtElement& x, const ExtElement& y) noexcept { return x.c_ == y.c_; }

  friend std::ostream& operator<<(std::ostream& os, const ExtElement& x)
  {
    os << '<';
    for (int i = 0; i < x.ctx_->degree; ++i)
      os << (i ? "," : "") << x.c_[i];
    return os << '>';
  }

private:
  const ExtensionData* ctx_;
  Coeffs c_;
};

/// GF(p^e) = F_p[z]/(m(z)) with m the lexicographically first monic irreducible of degree e.
class ExtensionField
{
public:
  using element_type = ExtElement;

  ExtensionField(PrimeModulus p, int degree) : data_(std::make_shared<ExtensionData>())
  {
    if (degree < 1 || degree > kMaxExtensionDegree)
      throw Error("extension degree out of range");
    auto d = std::const_pointer_cast<ExtensionData>(data_);
    d->p = p.value();
    d->degree = degree;
    d->order = 1;
    for (int i = 0; i < degree; ++i) {
      if (d->order > std::numeric_limits<std::uint64_t>::max() / 4 / p.value())
        throw Error("GF(p^e) too large for 64-bit exponent arithmetic");
      d->order *= p.value();
    }
    auto m = first_irreducible(p, degree);
    for (int j = 0; j < degree; ++j) {
      d->modulus[j] = m.coeff(static_cast<std::size_t>(j)).value();
      d->negated[j] = (-m.coeff(static_cast<std::size_t>(j))).value();
    }
  }

  /// Smallest extension with at least min_order elements (capped by degree and 2^60).
  static ExtensionField at_least(PrimeModulus p, std::uint64_t min_order)
  {
    int e = 1;
    std::uint64_t q = p.value();
    while (q < min_order && e < kMaxExtensionDegree && q <= (std::uint64_t{1} << 60) / p.value()) {
      q *= p.value();
      ++e;
    }
    return ExtensionField(p, e);
  }

  int degree() const noexcept { return data_->degree; }
  std::uint64_t order() const noexcept { return data_->order; }
  std::uint32_t characteristic() const noexcept { return data_->p; }

  ExtElement zero() const { return {data_.get(), {}}; }
  ExtElement one() const { return element(1); }

  ExtElement element(std::int64_t v) const
  {
    ExtElement::Coeffs c{};
    auto p = static_cast<std::int64_t>(data_->p);
    v %= p;
    c[0] = static_cast<std::uint32_t>(v < 0 ? v + p : v);
    return {data_.get(), c};
  }

  ExtElement embed(Fp x) const { return element(x.value()); }

  /// The element whose coefficient vector is the base-p expansion of index.
  /// Distinct indices below order() give distinct elements.
  ExtElement from_index(std::uint64_t index) const
  {
    ExtElement::Coeffs c{};
    for (int i = 0; i < data_->degree; ++i) {
      c[i] = static_cast<std::uint32_t>(index % data_->p);
      index /= data_->p;
    }
    return {data_.get(), c};
  }

  /// x if it lies in the prime subfield.
  std::optional<Fp> to_prime(const ExtElement& x, PrimeModulus p) const
  {
    for (int i = 1; i < data_->degree; ++i) {
      if (x.coeffs()[i] != 0)
        return std::nullopt;
    }
    return Fp(x.coeffs()[0], p);
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) { return a.data_ == b.data_; }

private:
  static Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m)
  {
    Polynomial acc = Polynomial::constant(m.field(), m.field().one()) % m;
    base = base % m;
    while (e > 0) {
      if (e & 1)
        acc = (acc * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return acc;
  }

  // Ben-Or: m of degree e is irreducible iff gcd(x^{p^i} - x, m) = 1 for i <= e/2.
  static bool is_irreducible(const Polynomial& m)
  {
    const auto& f = m.field();
    const auto x = Polynomial::monomial(f, f.one(), 1);
    Polynomial power = x;
    for (int i = 1; 2 * i <= m.degree(); ++i) {
      power = powmod(power, f.value(), m);
      if (gcd(power - x, m).degree() > 0)
        return false;
    }
    return true;
  }

  static Polynomial first_irreducible(PrimeModulus p, int degree)
  {
    std::vector<Fp> c(static_cast<std::size_t>(degree) + 1, p.zero());
    c.back() = p.one();
    if (degree == 1)
      return Polynomial(p, c);
    // Walk the lower coefficients as a base-p counter.
    for (;;) {
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(degree)) {
        c[i] = c[i] + p.one();
        if (!c[i].is_zero())
          break;
        ++i;
      }
      if (i == static_cast<std::size_t>(degree))
        throw NotFound("no irreducible polynomial found");
      Polynomial m(p, c);
      if (!c[0].is_zero() && is_irreducible(m))
        return m;
    }
  }

  std::shared_ptr<const ExtensionData> data_;
};

} // namespace galois

#endif
