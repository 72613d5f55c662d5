#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace galois;

namespace {

Polynomial poly(const std::vector<std::int64_t>& c, std::int64_t p)
{
  std::vector<Fp> v;
  for (auto x : c)
    v.emplace_back(x, PrimeModulus(p));
  return {PrimeModulus(p), v};
}

// f(t) on P^1(F_p) computed from raw coefficients; -1 for infinity.
std::int64_t value_at(const RationalFunction& f, int point, std::int64_t p)
{
  auto eval = [&](const Polynomial& g, std::int64_t t) {
    std::int64_t acc = 0;
    for (auto it = g.coefficients().rbegin(); it != g.coefficients().rend(); ++it)
      acc = oracle::mod(acc * t + it->value(), p);
    return acc;
  };
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  if (point == 0) {
    if (n.degree() > d.degree())
      return -1;
    if (n.degree() < d.degree())
      return 0;
    return oracle::mod(n.leading().value() * oracle::inverse(d.leading().value(), p), p);
  }
  const std::int64_t t = point - 1;
  const auto dv = eval(d, t);
  if (dv == 0)
    return -1;
  return oracle::mod(eval(n, t) * oracle::inverse(dv, p), p);
}

// f(g(x)) = f(x) on every point, with g applied through the Moebius oracle.
bool invariant_on_points(const RationalFunction& f, const Subgroup& g)
{
  const std::int64_t p = g.modulus().value();
  for (const auto& m : g.elements())
    for (int x = 0; x <= p; ++x) {
      const int y = oracle::moebius_index(m.a().value(), m.b().value(), m.c().value(), m.d().value(), x, p);
      if (value_at(f, x, p) != value_at(f, y, p))
        return false;
    }
  return true;
}

PairCertificate passing(const Subgroup& g1, const Subgroup& g2)
{
  return check_pair(g1, g2, ProjectivePoint::infinity(g1.modulus()));
}

} // namespace

TEST(RationalFunction, NormalizesOnConstruction)
{
  // (2t^2 - 2) / (2t - 2) = t + 1.
  const RationalFunction f(poly({-2, 0, 2}, 11), poly({-2, 2}, 11));
  EXPECT_EQ(f.numerator(), poly({1, 1}, 11));
  EXPECT_EQ(f.denominator(), poly({1}, 11));
  EXPECT_EQ(f.degree(), 1);
  EXPECT_THROW(RationalFunction(poly({1}, 11), poly({}, 11)), ZeroInverse);
}

TEST(InvariantGenerator, TrivialGroupGivesIdentity)
{
  const auto f = invariant_generator(Subgroup::trivial(PrimeModulus(11)));
  EXPECT_EQ(f, RationalFunction::identity(PrimeModulus(11)));
}

TEST(InvariantGenerator, SignChange)
{
  const auto g = fx::f11.group({fx::f11.m(-1, 0, 0, 1)});
  ASSERT_EQ(g.order(), 2u);
  const auto f = invariant_generator(g);
  EXPECT_EQ(f.degree(), 2);
  // Even in t: a Moebius image of t^2.
  for (std::size_t i = 1; i < 3; i += 2) {
    EXPECT_TRUE(f.numerator().coeff(i).is_zero());
    EXPECT_TRUE(f.denominator().coeff(i).is_zero());
  }
  EXPECT_TRUE(is_invariant(f, g));
  EXPECT_TRUE(invariant_on_points(f, g));
}

TEST(InvariantGenerator, WorkedExampleGroupsHaveFullDegree)
{
  for (const auto& g : {fx::g1_11(), fx::g2_11(), fx::g3_11(), fx::g1_23(), fx::g2_23()}) {
    const auto f = invariant_generator(g);
    EXPECT_EQ(static_cast<std::size_t>(f.degree()), g.order());
    EXPECT_TRUE(is_invariant(f, g));
    EXPECT_TRUE(invariant_on_points(f, g));
    EXPECT_TRUE(fibres_are_orbit_unions(f, g));
  }
}

TEST(InvariantGenerator, NonInvariantDetected)
{
  const auto f = RationalFunction::identity(PrimeModulus(11));
  EXPECT_FALSE(is_invariant(f, fx::xi11()));
  EXPECT_TRUE(is_invariant(f, ProjectiveMatrix::identity(PrimeModulus(11))));
}

TEST(MoebiusAdjust, Examples)
{
  const PrimeModulus p(11);
  const auto h = moebius_adjust(RationalFunction::identity(p), Subgroup::trivial(p), ProjectivePoint(1, 0, p));
  EXPECT_EQ(h.numerator(), poly({1}, 11));
  EXPECT_EQ(h.denominator(), poly({0, 1}, 11));

  const auto g1 = fx::g1_11();
  const auto h1 = moebius_adjust(invariant_generator(g1), g1, fx::f11.inf());
  EXPECT_EQ(h1.denominator().degree(), 11);
  EXPECT_EQ(h1.degree(), 12);
  // Poles: every affine point and infinity, i.e. the whole orbit.
  for (std::int64_t t = 0; t < 11; ++t)
    EXPECT_FALSE(h1.evaluate(ProjectivePoint(1, t, p)).has_value());
  EXPECT_FALSE(h1.evaluate(fx::f11.inf()).has_value());
  EXPECT_TRUE(is_invariant(h1, g1));
}

TEST(MoebiusAdjust, PolesAreTheOrbit)
{
  // <xi^3> at p = 23 has order 8 and orbits of length 8.
  const auto g = fx::f23.group({power(fx::xi23(), 3)});
  ASSERT_EQ(g.order(), 8u);
  const auto f = invariant_generator(g);
  for (const auto& q : enumerate_points(PrimeModulus(23))) {
    const auto h = moebius_adjust(f, g, q);
    const auto orb = orbit(g, q);
    for (const auto& x : enumerate_points(PrimeModulus(23))) {
      const bool pole = !h.evaluate(x).has_value();
      EXPECT_EQ(pole, std::binary_search(orb.begin(), orb.end(), x));
    }
  }
}

TEST(MoebiusAdjust, IrregularOrbitRejected)
{
  // t -> -t fixes (0:1).
  const auto g = fx::f23.group({fx::f23.m(-1, 0, 0, 1)});
  EXPECT_THROW(moebius_adjust(invariant_generator(g), g, fx::f23.inf()), IrregularOrbit);
}

TEST(EmitParametrization, SmallCase)
{
  const auto cert = passing(fx::g1_11(), fx::g2_11());
  ASSERT_TRUE(cert.passed);
  const auto c = emit_parametrization(cert);
  EXPECT_EQ(c.degree, 12u);
  EXPECT_EQ(c.max_component_degree(), 12);
  EXPECT_EQ(c.d.degree(), 11);
  EXPECT_EQ(implicit_degree(c), 12);
  EXPECT_EQ(oracle::image_degree_by_gcd_index(c), 12);
  // A / D and B / D are invariant under G1 and G2 respectively.
  EXPECT_TRUE(invariant_on_points(RationalFunction(c.a, c.d), fx::g1_11()));
  EXPECT_TRUE(invariant_on_points(RationalFunction(c.b, c.d), fx::g2_11()));
  EXPECT_TRUE(fibres_are_orbit_unions(RationalFunction(c.a, c.d), fx::g1_11()));
}

TEST(EmitParametrization, RejectsFailingCertificate)
{
  const auto cert = passing(fx::g1_11(), fx::g1_11());
  ASSERT_FALSE(cert.passed);
  EXPECT_THROW(emit_parametrization(cert), FailingCertificate);
}

TEST(ImplicitDegree, Examples)
{
  const std::int64_t p = 11;
  const auto t = poly({0, 1}, p), one = poly({1}, p);
  EXPECT_EQ(implicit_degree({t, one, one, 1}), 1);
  // A = B: the image is the line x = y.
  const auto cube = poly({3, 0, 1, 5}, p);
  EXPECT_EQ(implicit_degree({cube, cube, poly({1, 1}, p), 3}), 1);
  // (t^2, t^4, 1) covers the parabola twice.
  const CurveParametrization par{poly({0, 0, 1}, p), poly({0, 0, 0, 0, 1}, p), one, 4};
  EXPECT_EQ(implicit_degree(par), 2);
  EXPECT_EQ(oracle::image_degree_by_gcd_index(par), 2);
  // Constant map.
  EXPECT_EQ(implicit_degree({one, one, one, 0}), 0);
  // A shared factor t makes the resultant vanish identically.
  EXPECT_THROW(implicit_degree({t, t, t, 1}), ResultantVanishes);
}

TEST(ImplicitDegree, AgreesWithGcdIndexOracle)
{
  std::mt19937_64 rng(99);
  const std::int64_t p = 23;
  for (int trial = 0; trial < 12; ++trial) {
    auto random_poly = [&](int deg) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c)
        x = static_cast<std::int64_t>(rng() % p);
      c.back() = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      return poly(c, p);
    };
    // Compose with t^k to force a k-to-1 map on some trials.
    const int k = 1 + trial % 3;
    auto inflate = [&](const Polynomial& f) {
      Polynomial out{PrimeModulus(p)};
      for (std::size_t i = 0; i < f.coefficients().size(); ++i)
        out = out + Polynomial::monomial(PrimeModulus(p), f.coefficients()[i], i * static_cast<std::size_t>(k));
      return out;
    };
    const CurveParametrization c{inflate(random_poly(3)), inflate(random_poly(2)), inflate(random_poly(3)),
                                 static_cast<std::uint64_t>(3 * k)};
    if (gcd(gcd(c.a, c.b), c.d).degree() > 0)
      continue;
    EXPECT_EQ(implicit_degree(c), oracle::image_degree_by_gcd_index(c)) << "trial " << trial;
  }
}

TEST(ImplicitPolynomial, VanishesOnTheCurve)
{
  const std::int64_t p = 11;
  const CurveParametrization c{poly({0, 1}, p), poly({0, 0, 1}, p), poly({1}, p), 2};
  const auto f = implicit_polynomial(c);
  EXPECT_FALSE(f.is_zero());
  EXPECT_EQ(f.total_degree(), 2);
  for (std::int64_t t = 0; t < p; ++t) {
    const Fp x(t, PrimeModulus(p));
    EXPECT_TRUE(f(x, x * x).is_zero());
  }
}
