#ifndef GALOIS_POLYNOMIAL_HPP
#define GALOIS_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "prime_field.hpp"

namespace galois {

/// Dense univariate polynomial, coefficients lowest degree first, never
/// carrying a zero leading coefficient.
///
/// Field is a small value type exposing element_type, zero(), one() and
/// element(int64); PrimeModulus and ExtensionField both qualify.
template <typename Field>
class BasicPolynomial
{
public:
  using element_type = typename Field::element_type;

  explicit BasicPolynomial(Field f) : field_(std::move(f)) {}

  BasicPolynomial(Field f, std::vector<element_type> coeffs)
      : field_(std::move(f)), c_(std::move(coeffs))
  {
    trim();
  }

  static BasicPolynomial constant(const Field& f, element_type v) { return {f, {v}}; }

  /// coeff * x^k
  static BasicPolynomial monomial(const Field& f, element_type coeff, std::size_t k)
  {
    std::vector<element_type> c(k + 1, f.zero());
    c[k] = coeff;
    return {f, std::move(c)};
  }

  /// x - root
  static BasicPolynomial linear_root(const Field& f, element_type root)
  {
    return {f, {element_type(f.zero()) - root, f.one()}};
  }

  const Field& field() const noexcept { return field_; }
  const std::vector<element_type>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  element_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  element_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  element_type operator()(const element_type& x) const
  {
    element_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  BasicPolynomial operator+(const BasicPolynomial& o) const
  {
    std::vector<element_type> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      r[i] = r[i] + o.c_[i];
    return {field_, std::move(r)};
  }

  BasicPolynomial operator-() const
  {
    std::vector<element_type> r;
    r.reserve(c_.size());
    for (const auto& x : c_)
      r.push_back(-x);
    return {field_, std::move(r)};
  }

  BasicPolynomial operator-(const BasicPolynomial& o) const { return *this + (-o); }

  BasicPolynomial operator*(const BasicPolynomial& o) const
  {
    if (is_zero() || o.is_zero())
      return BasicPolynomial(field_);
    std::vector<element_type> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == field_.zero())
        continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return {field_, std::move(r)};
  }

  BasicPolynomial scaled(const element_type& s) const
  {
    std::vector<element_type> r;
    r.reserve(c_.size());
    for (const auto& x : c_)
      r.push_back(x * s);
    return {field_, std::move(r)};
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = *this - o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  BasicPolynomial monic() const
  {
    if (is_zero())
      return *this;
    return scaled(leading().inverse());
  }

  BasicPolynomial derivative() const
  {
    std::vector<element_type> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * field_.element(static_cast<std::int64_t>(i)));
    return {field_, std::move(r)};
  }

  BasicPolynomial pow(std::uint64_t e) const
  {
    BasicPolynomial acc = constant(field_, field_.one());
    BasicPolynomial base = *this;
    while (e > 0) {
      if (e & 1)
        acc *= base;
      e >>= 1;
      if (e > 0)
        base *= base;
    }
    return acc;
  }

  friend bool operator==(const BasicPolynomial& x, const BasicPolynomial& y) { return x.c_ == y.c_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicPolynomial& f)
  {
    os << '[';
    for (std::size_t i = 0; i < f.c_.size(); ++i)
      os << (i ? "," : "") << f.c_[i];
    return os << ']';
  }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == field_.zero())
      c_.pop_back();
  }

  Field field_;
  std::vector<element_type> c_;
};

using Polynomial = BasicPolynomial<PrimeModulus>;

/// Quotient and remainder; throws ZeroInverse (via the leading coefficient) on division by zero.
template <typename Field>
std::pair<BasicPolynomial<Field>, BasicPolynomial<Field>> divmod(const BasicPolynomial<Field>& a,
                                                                 const BasicPolynomial<Field>& b)
{
  using E = typename Field::element_type;
  const auto& f = a.field();
  if (b.is_zero())
    throw ZeroInverse("polynomial division by zero");
  if (a.degree() < b.degree())
    return {BasicPolynomial<Field>(f), a};
  std::vector<E> rem = a.coefficients();
  std::vector<E> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  const E lead_inv = b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    E q = rem[k + db] * lead_inv;
    quo[k] = q;
    if (q == f.zero())
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] = rem[k + j] - q * b.coefficients()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {BasicPolynomial<Field>(f, std::move(quo)), BasicPolynomial<Field>(f, std::move(rem))};
}

template <typename Field>
BasicPolynomial<Field> operator%(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b)
{
  return divmod(a, b).second;
}

template <typename Field>
BasicPolynomial<Field> operator/(const BasicPolynomial<Field>& a, const BasicPolynomial<Field>& b)
{
  return divmod(a, b).first;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <typename Field>
BasicPolynomial<Field> gcd(BasicPolynomial<Field> a, BasicPolynomial<Field> b)
{
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

template <typename E>
E power(E base, std::uint64_t e, E one)
{
  E acc = one;
  while (e > 0) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Res(f, g) for nonzero f, g of their actual degrees.
template <typename Field>
typename Field::element_type resultant_exact(BasicPolynomial<Field> f, BasicPolynomial<Field> g)
{
  using E = typename Field::element_type;
  const Field field = f.field();
  E acc = field.one();
  for (;;) {
    const int m = f.degree(), n = g.degree();
    if (m == 0)
      return acc * power<E>(f.leading(), static_cast<std::uint64_t>(n), field.one());
    if (n == 0)
      return acc * power<E>(g.leading(), static_cast<std::uint64_t>(m), field.one());
    if (m < n) {
      if ((m * n) % 2 == 1)
        acc = -acc;
      std::swap(f, g);
      continue;
    }
    // Res(f,g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r) with r = f mod g.
    auto r = f % g;
    if (r.is_zero())
      return field.zero();
    if ((m * n) % 2 == 1)
      acc = -acc;
    acc = acc * power<E>(g.leading(), static_cast<std::uint64_t>(m - r.degree()), field.one());
    f = std::move(g);
    g = std::move(r);
  }
}

} // namespace detail

/// Sylvester resultant Res_{m,n}(f, g) with formal degrees m >= deg f, n >= deg g.
///
/// Formal degrees matter when a leading coefficient vanishes only at a
/// specialization; the result then agrees with the specialized determinant.
template <typename Field>
typename Field::element_type resultant(const BasicPolynomial<Field>& f, const BasicPolynomial<Field>& g,
                                       int m, int n)
{
  using E = typename Field::element_type;
  const Field& field = f.field();
  if (f.degree() > m || g.degree() > n)
    throw Error("resultant: formal degree below actual degree");
  if (n == 0)
    return detail::power<E>(g.coeff(0), static_cast<std::uint64_t>(m), field.one());
  if (m == 0)
    return detail::power<E>(f.coeff(0), static_cast<std::uint64_t>(n), field.one());
  if (f.is_zero() || g.is_zero())
    return field.zero();
  if (f.degree() < m && g.degree() < n)
    return field.zero();
  E factor = field.one();
  if (f.degree() < m) {
    // Expanding the first Sylvester column: Res_{m,n} = (-1)^n g_n Res_{m-1,n}.
    E step = (n % 2 == 1) ? -g.leading() : g.leading();
    factor = detail::power<E>(step, static_cast<std::uint64_t>(m - f.degree()), field.one());
  } else if (g.degree() < n) {
    factor = detail::power<E>(f.leading(), static_cast<std::uint64_t>(n - g.degree()), field.one());
  }
  return factor * detail::resultant_exact(f, g);
}

/// Resultant with the actual degrees as formal degrees.
template <typename Field>
typename Field::element_type resultant(const BasicPolynomial<Field>& f, const BasicPolynomial<Field>& g)
{
  return resultant(f, g, std::max(f.degree(), 0), std::max(g.degree(), 0));
}

} // namespace galois

#endif
