#ifndef GALOIS_QUOTIENT_HPP
#define GALOIS_QUOTIENT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "extension_field.hpp"
#include "group.hpp"
#include "polynomial.hpp"

namespace galois {

/// num/den in lowest terms with a monic denominator.
class RationalFunction
{
public:
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
  {
    if (den_.is_zero())
      throw ZeroInverse("rational function with zero denominator");
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    auto lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
  }

  /// t, the identity map.
  static RationalFunction identity(PrimeModulus p)
  {
    return {Polynomial::monomial(p, p.one(), 1), Polynomial::constant(p, p.one())};
  }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  PrimeModulus modulus() const noexcept { return den_.field(); }

  int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const noexcept { return degree() <= 0; }

  /// Value at a point of P^1(F_p); nullopt stands for infinity.
  std::optional<Fp> evaluate(const ProjectivePoint& q) const
  {
    if (q.is_infinity()) {
      if (num_.degree() > den_.degree())
        return std::nullopt;
      if (num_.degree() < den_.degree())
        return modulus().zero();
      return num_.leading() / den_.leading();
    }
    Fp d = den_(q.t());
    if (d.is_zero())
      return std::nullopt;
    return num_(q.t()) / d;
  }

  RationalFunction operator+(const RationalFunction& o) const
  {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  Polynomial num_;
  Polynomial den_;
};

/// (a + c t)^m P((b + d t)/(a + c t)): P pulled back along the row action of
/// [[a,b],[c,d]], which sends the affine coordinate t to (b + d t)/(a + c t).
inline Polynomial pullback(const Polynomial& poly, int m, const ProjectiveMatrix& g)
{
  const PrimeModulus p = g.modulus();
  const Polynomial image(p, {g.b(), g.d()});
  const Polynomial denom(p, {g.a(), g.c()});
  Polynomial acc(p);
  for (int i = 0; i <= m; ++i) {
    Fp c = poly.coeff(static_cast<std::size_t>(i));
    if (c.is_zero())
      continue;
    acc += (image.pow(static_cast<std::uint64_t>(i)) * denom.pow(static_cast<std::uint64_t>(m - i))).scaled(c);
  }
  return acc;
}

/// f o g == f as rational functions, checked after clearing denominators.
inline bool is_invariant(const RationalFunction& f, const ProjectiveMatrix& g)
{
  const int m = f.degree();
  const auto n = pullback(f.numerator(), m, g);
  const auto d = pullback(f.denominator(), m, g);
  return n * f.denominator() == f.numerator() * d;
}

inline bool is_invariant(const RationalFunction& f, const Subgroup& g)
{
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](const ProjectiveMatrix& a) { return is_invariant(f, a); });
}

/// A degree-|G| rational function constant on G-orbits.
///
/// Expands prod_{g in G} ((a + c t) X - (b + d t)) in F_p[t][X]; the
/// elementary symmetric functions e_j of the images g(t) are its
/// coefficients over the leading one. The first non-constant e_j is
/// returned; it has degree exactly |G|.
inline RationalFunction invariant_generator(const Subgroup& g)
{
  const PrimeModulus p = g.modulus();
  const std::size_t n = g.order();

  // product[k] is the coefficient of X^k.
  std::vector<Polynomial> product{Polynomial::constant(p, p.one())};
  for (const auto& a : g.elements()) {
    const Polynomial lin(p, {a.a(), a.c()});
    const Polynomial cst(p, {-a.b(), -a.d()});
    std::vector<Polynomial> next(product.size() + 1, Polynomial(p));
    for (std::size_t k = 0; k < product.size(); ++k) {
      next[k + 1] += product[k] * lin;
      next[k] += product[k] * cst;
    }
    product = std::move(next);
  }

  const Polynomial& lead = product[n];
  std::vector<RationalFunction> symmetric; // symmetric[j-1] = e_j
  for (std::size_t j = 1; j <= n; ++j) {
    Polynomial num = product[n - j];
    if (j % 2 == 1)
      num = -num;
    RationalFunction e(std::move(num), lead);
    if (static_cast<std::size_t>(e.degree()) == n && is_invariant(e, g))
      return e;
    symmetric.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < symmetric.size(); ++i) {
    for (std::size_t j = i + 1; j < symmetric.size(); ++j) {
      auto combo = symmetric[i] + symmetric[j];
      if (static_cast<std::size_t>(combo.degree()) == n && is_invariant(combo, g))
        return combo;
    }
  }
  throw DegenerateInvariant("no symmetric function of the orbit reaches degree " + std::to_string(n));
}

/// Monic polynomial vanishing exactly on the affine points of pts.
inline Polynomial vanishing_polynomial(PrimeModulus p, const std::vector<ProjectivePoint>& pts)
{
  Polynomial v = Polynomial::constant(p, p.one());
  for (const auto& q : pts) {
    if (!q.is_infinity())
      v *= Polynomial::linear_root(p, q.t());
  }
  return v;
}

/// h = 1/(f - f(Q)): moves the fibre through Q to infinity. The poles of h are
/// then exactly the orbit of Q, all simple; its denominator is the orbit's
/// vanishing polynomial (degree |G| - 1 when (0:1) is in the orbit).
inline RationalFunction moebius_adjust(const RationalFunction& f, const Subgroup& g, const ProjectivePoint& q)
{
  const auto orb = orbit(g, q);
  if (orb.size() != g.order())
    throw IrregularOrbit("orbit of Q has " + std::to_string(orb.size()) + " points but |G| = " +
                         std::to_string(g.order()));

  const auto value = f.evaluate(q);
  RationalFunction h = value ? RationalFunction(f.denominator(), f.numerator() - f.denominator().scaled(*value))
                             : f;

  const bool infinity_in_orbit = orb.front().is_infinity();
  if (h.denominator() != vanishing_polynomial(g.modulus(), orb))
    throw EvaluationAtPole("polar set of the adjusted map is not the orbit of Q");
  const int excess = h.numerator().degree() - h.denominator().degree();
  if (infinity_in_orbit ? excess != 1 : excess > 0)
    throw EvaluationAtPole("pole at infinity has the wrong order");
  return h;
}

/// t -> (A(t) : B(t) : D(t)) in P^2.
struct CurveParametrization
{
  Polynomial a;
  Polynomial b;
  Polynomial d;
  std::uint64_t degree = 0;

  int max_component_degree() const { return std::max({a.degree(), b.degree(), d.degree()}); }
};

/// Rebuilds both groups from the certificate's generators, aligns their
/// quotient maps on the shared orbit, and returns (h1 : h2 : 1) over a common
/// denominator.
inline CurveParametrization emit_parametrization(const PairCertificate& cert,
                                                 std::size_t cap = kDefaultClosureCap)
{
  if (!cert.passed)
    throw FailingCertificate("cannot emit a curve for a failing pair");
  const auto g1 = generate_closure(cert.p, cert.g1, cap);
  const auto g2 = generate_closure(cert.p, cert.g2, cap);
  const auto h1 = moebius_adjust(invariant_generator(g1), g1, cert.base_point);
  const auto h2 = moebius_adjust(invariant_generator(g2), g2, cert.base_point);
  if (h1.denominator() != h2.denominator())
    throw IrregularOrbit("the two orbits do not share a vanishing polynomial");
  return {h1.numerator(), h2.numerator(), h1.denominator(), cert.degree};
}

/// Dense bivariate polynomial: coeff[i][j] multiplies x^i y^j.
struct BivariatePolynomial
{
  PrimeModulus p{2};
  std::vector<std::vector<Fp>> coeff;

  bool is_zero() const
  {
    for (const auto& row : coeff)
      for (const auto& c : row)
        if (!c.is_zero())
          return false;
    return true;
  }

  /// -1 for the zero polynomial.
  int total_degree() const
  {
    int best = -1;
    for (std::size_t i = 0; i < coeff.size(); ++i)
      for (std::size_t j = 0; j < coeff[i].size(); ++j)
        if (!coeff[i][j].is_zero())
          best = std::max(best, static_cast<int>(i + j));
    return best;
  }

  Fp operator()(Fp x, Fp y) const
  {
    Fp acc = p.zero();
    for (std::size_t i = coeff.size(); i-- > 0;) {
      Fp row = p.zero();
      for (std::size_t j = coeff[i].size(); j-- > 0;)
        row = row * y + coeff[i][j];
      acc = acc * x + row;
    }
    return acc;
  }
};

namespace detail {

using ExtPolynomial = BasicPolynomial<ExtensionField>;

inline ExtPolynomial lift(const ExtensionField& e, const Polynomial& f)
{
  std::vector<ExtElement> c;
  for (const auto& x : f.coefficients())
    c.push_back(e.embed(x));
  return {e, std::move(c)};
}

// Newton interpolation on fixed nodes; inv_diff[i][k] = 1/(z_i - z_{i-k}).
inline std::vector<ExtElement> interpolate(const ExtensionField& e, const std::vector<ExtElement>& nodes,
                                           const std::vector<std::vector<ExtElement>>& inv_diff,
                                           std::vector<ExtElement> dd)
{
  const std::size_t n = nodes.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) * inv_diff[i][k];
  std::vector<ExtElement> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - z_k) + dd[k]
    std::vector<ExtElement> next(poly.size() + 1, e.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * nodes[k];
    }
    next[0] = next[0] + dd[k];
    poly = std::move(next);
  }
  poly.resize(n, e.zero());
  return poly;
}

inline ExtPolynomial pth_root(const ExtPolynomial& f)
{
  const auto p = f.field().characteristic();
  std::vector<ExtElement> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p)
    c.push_back(f.coefficients()[i].pth_root());
  return {f.field(), std::move(c)};
}

/// Number of distinct roots in the algebraic closure.
inline int distinct_root_count(const ExtPolynomial& r)
{
  if (r.degree() <= 0)
    return 0;
  const auto dr = r.derivative();
  if (dr.is_zero())
    return distinct_root_count(pth_root(r));
  const auto g = gcd(r, dr);
  const auto w = r / g; // product of the factors whose multiplicity p does not divide
  auto h = g;
  for (;;) {
    auto c = gcd(h, w);
    if (c.degree() <= 0)
      break;
    h = h / c;
  }
  return w.degree() + distinct_root_count(h);
}

inline std::uint64_t splitmix64(std::uint64_t& state)
{
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace detail

/// Res_t(A(t) - x D(t), B(t) - y D(t)) with both arguments at formal degree
/// n = max component degree. Evaluated on an (n+1)^2 grid over GF(p^e) and
/// interpolated; the coefficients land back in F_p.
inline BivariatePolynomial implicit_polynomial(const CurveParametrization& c)
{
  const PrimeModulus p = c.d.field();
  const int n = std::max(c.max_component_degree(), 0);
  const auto field = ExtensionField::at_least(p, static_cast<std::uint64_t>(n) + 1);
  if (field.order() < static_cast<std::uint64_t>(n) + 1)
    throw Error("no interpolation field large enough for degree " + std::to_string(n));

  const auto a = detail::lift(field, c.a);
  const auto b = detail::lift(field, c.b);
  const auto d = detail::lift(field, c.d);
  const auto size = static_cast<std::size_t>(n) + 1;

  std::vector<ExtElement> nodes;
  for (std::size_t i = 0; i < size; ++i)
    nodes.push_back(field.from_index(i));
  std::vector<std::vector<ExtElement>> inv_diff(size, std::vector<ExtElement>(size, field.zero()));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 1; k <= i; ++k)
      inv_diff[i][k] = (nodes[i] - nodes[i - k]).inverse();

  std::vector<detail::ExtPolynomial> fx, gy;
  for (const auto& z : nodes) {
    fx.push_back(a - d.scaled(z));
    gy.push_back(b - d.scaled(z));
  }

  // rows[i][j] = coefficient of y^j in Res(x_i, y).
  std::vector<std::vector<ExtElement>> rows;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<ExtElement> values;
    for (std::size_t j = 0; j < size; ++j)
      values.push_back(resultant(fx[i], gy[j], n, n));
    rows.push_back(detail::interpolate(field, nodes, inv_diff, std::move(values)));
  }

  BivariatePolynomial out{p, std::vector<std::vector<Fp>>(size, std::vector<Fp>(size, p.zero()))};
  for (std::size_t j = 0; j < size; ++j) {
    std::vector<ExtElement> column;
    for (std::size_t i = 0; i < size; ++i)
      column.push_back(rows[i][j]);
    const auto cx = detail::interpolate(field, nodes, inv_diff, std::move(column));
    for (std::size_t i = 0; i < size; ++i) {
      auto v = field.to_prime(cx[i], p);
      if (!v)
        throw Error("implicit polynomial coefficient outside F_p");
      out.coeff[i][j] = *v;
    }
  }
  return out;
}

/// Degree of the reduced implicit equation F of the image curve.
///
/// The resultant is c * F^k where k is the degree of t -> image, so its own
/// total degree is always n. deg F is read off as the number of distinct
/// intersections of the resultant with generic lines over a large GF(p^e):
/// a special line can only lose intersections, so the maximum over a few
/// lines is exact as soon as one of them is generic. Each restriction
/// u -> Res(x(u), y(u)) has degree <= n and is interpolated from n + 1
/// resultants, which avoids building the full bivariate grid.
inline int implicit_degree(const CurveParametrization& c)
{
  const PrimeModulus p = c.d.field();
  const int n = std::max(c.max_component_degree(), 0);
  if (n == 0)
    return 0;
  const auto field = ExtensionField::at_least(p, std::uint64_t{1} << 40);
  using detail::ExtPolynomial;

  const auto a = detail::lift(field, c.a);
  const auto b = detail::lift(field, c.b);
  const auto d = detail::lift(field, c.d);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<ExtElement> nodes;
  for (std::size_t i = 0; i < size; ++i)
    nodes.push_back(field.from_index(i));
  std::vector<std::vector<ExtElement>> inv_diff(size, std::vector<ExtElement>(size, field.zero()));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 1; k <= i; ++k)
      inv_diff[i][k] = (nodes[i] - nodes[i - k]).inverse();

  std::uint64_t state = 0x243f6a8885a308d3ULL;
  auto pick = [&] { return field.from_index(detail::splitmix64(state) % field.order()); };

  int best = 0;
  bool nonzero = false;
  for (int line = 0; line < 3; ++line) {
    const auto x0 = pick(), dx = pick(), y0 = pick(), dy = pick();
    std::vector<ExtElement> values;
    for (const auto& u : nodes)
      values.push_back(resultant(a - d.scaled(x0 + dx * u), b - d.scaled(y0 + dy * u), n, n));
    const ExtPolynomial r(field, detail::interpolate(field, nodes, inv_diff, std::move(values)));
    if (r.is_zero())
      continue;
    nonzero = true;
    best = std::max(best, detail::distinct_root_count(r));
  }
  if (!nonzero)
    throw ResultantVanishes("components share a common factor");
  return best;
}

/// Every level set of h on P^1(F_p) is a union of G-orbits.
inline bool fibres_are_orbit_unions(const RationalFunction& h, const Subgroup& g)
{
  for (const auto& q : enumerate_points(g.modulus())) {
    const auto v = h.evaluate(q);
    for (const auto& a : g.elements()) {
      if (h.evaluate(apply(q, a)) != v)
        return false;
    }
  }
  return true;
}

} // namespace galois

#endif
