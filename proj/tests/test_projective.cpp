#include <gtest/gtest.h>

#include <set>

#include "galois/projective.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

ProjectiveMatrix mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p)
{
  return normalize(RawMatrix{a, b, c, d}, PrimeModulus(p));
}

void expect_entries(const ProjectiveMatrix& m, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
{
  EXPECT_EQ(m.a().value(), a);
  EXPECT_EQ(m.b().value(), b);
  EXPECT_EQ(m.c().value(), c);
  EXPECT_EQ(m.d().value(), d);
}

} // namespace

TEST(ProjectivePoint, CanonicalForms)
{
  const PrimeModulus p(11);
  const ProjectivePoint q(3, 6, p);
  EXPECT_EQ(q.s().value(), 1u);
  EXPECT_EQ(q.t().value(), 2u);
  const ProjectivePoint inf(0, 7, p);
  EXPECT_TRUE(inf.is_infinity());
  EXPECT_EQ(inf, ProjectivePoint::infinity(p));
  EXPECT_EQ(inf.index(), 0u);
  EXPECT_EQ(q.index(), 3u);
  EXPECT_THROW(ProjectivePoint(0, 0, p), SingularMatrix);
  EXPECT_EQ(ProjectivePoint(-1, 1, p), ProjectivePoint(1, 10, p));
}

TEST(ProjectivePoint, Enumeration)
{
  const auto pts2 = enumerate_points(PrimeModulus(2));
  ASSERT_EQ(pts2.size(), 3u);
  EXPECT_TRUE(pts2[0].is_infinity());
  EXPECT_EQ(pts2[1], ProjectivePoint(1, 0, PrimeModulus(2)));
  EXPECT_EQ(pts2[2], ProjectivePoint(1, 1, PrimeModulus(2)));
  for (std::int64_t q : {11, 23, 59}) {
    const auto pts = enumerate_points(PrimeModulus(q));
    EXPECT_EQ(pts.size(), static_cast<std::size_t>(q + 1));
    EXPECT_EQ(std::set<ProjectivePoint>(pts.begin(), pts.end()).size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      EXPECT_EQ(pts[i].index(), i);
  }
}

TEST(ProjectiveMatrix, NormalizeExamples)
{
  expect_entries(mat(2, 0, 0, 2, 11), 1, 0, 0, 1);
  expect_entries(mat(4, 4, 4, 7, 11), 1, 1, 1, 10);
  // 12^-1 = 2 mod 23, and 2 * 2 = 4.
  expect_entries(mat(0, 12, 2, 0, 23), 0, 1, 4, 0);
  expect_entries(mat(0, 3, 5, 3, 7), 0, 1, 4, 1);
  EXPECT_THROW(mat(1, 2, 2, 4, 11), SingularMatrix);
  EXPECT_THROW(mat(0, 0, 0, 0, 11), SingularMatrix);
  EXPECT_EQ(mat(-1, -3, -3, 1, 23), mat(22, 20, 20, 1, 23));
}

TEST(ProjectiveMatrix, NormalizeIsScalarInvariantAndIdempotent)
{
  const std::int64_t q = 7;
  const PrimeModulus p(q);
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      for (std::int64_t c = 0; c < q; ++c)
        for (std::int64_t d = 0; d < q; ++d) {
          if (oracle::mod(a * d - b * c, q) == 0)
            continue;
          const auto m = normalize(RawMatrix{a, b, c, d}, p);
          const auto first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
          const auto inv = oracle::inverse(first, q);
          EXPECT_EQ(m.a().value(), oracle::mod(a * inv, q));
          EXPECT_EQ(m.b().value(), oracle::mod(b * inv, q));
          EXPECT_EQ(m.c().value(), oracle::mod(c * inv, q));
          EXPECT_EQ(m.d().value(), oracle::mod(d * inv, q));
          for (std::int64_t s = 1; s < q; ++s)
            EXPECT_EQ(normalize(RawMatrix{a * s, b * s, c * s, d * s}, p), m);
          EXPECT_EQ(normalize(RawMatrix{m.a().value(), m.b().value(), m.c().value(), m.d().value()}, p), m);
        }
}

TEST(ProjectiveMatrix, EnumerationCoversPgl)
{
  for (std::int64_t q : {2, 3, 5, 7}) {
    const auto all = enumerate_matrices(PrimeModulus(q));
    EXPECT_EQ(all.size(), static_cast<std::size_t>(q * q * q - q));
    EXPECT_EQ(std::set<ProjectiveMatrix>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(ProjectiveMatrix, ComposeExamples)
{
  const PrimeModulus p(11);
  const auto id = ProjectiveMatrix::identity(p);
  const auto sigma = mat(0, 2, 1, 0, 11);
  const auto tau = mat(1, 2, 10, 10, 11);
  EXPECT_EQ(compose(id, sigma), sigma);
  EXPECT_EQ(compose(sigma, tau), mat(0 * 1 + 2 * 10, 0 * 2 + 2 * 10, 1 * 1 + 0 * 10, 1 * 2 + 0 * 10, 11));
  EXPECT_EQ(compose(sigma, tau), compose(tau, sigma));

  const auto tau_prime = mat(4, 1, 4, 5, 11);
  const auto t3 = power(tau_prime, 3);
  EXPECT_EQ(compose(sigma, t3), mat(6, 9, 1, 9, 11));
  EXPECT_EQ(compose(t3, sigma), mat(2, 9, 1, 5, 11));
}

TEST(ProjectiveMatrix, InverseAndPower)
{
  const PrimeModulus p(11);
  const auto id = ProjectiveMatrix::identity(p);
  EXPECT_EQ(inverse(id), id);
  const auto sigma = mat(0, 2, 1, 0, 11);
  EXPECT_EQ(inverse(sigma), sigma);
  const auto xi = mat(2, 1, 1, 0, 11);
  EXPECT_EQ(compose(xi, inverse(xi)), id);
  EXPECT_EQ(compose(inverse(xi), xi), id);
  EXPECT_EQ(power(xi, 6), mat(1, 1, 1, 10, 11));
  EXPECT_EQ(power(xi, 4), mat(7, 1, 1, 5, 11));
  EXPECT_EQ(power(xi, -1), inverse(xi));
  EXPECT_EQ(power(xi, 0), id);
  EXPECT_EQ(power(xi, 12), id);
}

TEST(ProjectiveMatrix, ElementOrders)
{
  EXPECT_EQ(element_order(ProjectiveMatrix::identity(PrimeModulus(5))), 1u);
  EXPECT_EQ(element_order(mat(2, 1, 1, 0, 11)), 12u);
  // A_tau' at p = 59 with alpha = 2: [[a^2, a^3], [-1, -1]].
  EXPECT_EQ(element_order(mat(4, 8, -1, -1, 59)), 30u);
  for (std::int64_t q : {5, 7}) {
    for (const auto& m : enumerate_matrices(PrimeModulus(q))) {
      const auto n = element_order(m);
      EXPECT_EQ((q * q * q - q) % static_cast<std::int64_t>(n), 0);
      EXPECT_EQ(static_cast<int>(n), oracle::perm_order(oracle::perm_of(m)));
    }
  }
}

TEST(ProjectiveMatrix, ApplyExamples)
{
  const PrimeModulus p(23);
  const auto q = ProjectivePoint::infinity(p);
  EXPECT_EQ(apply(q, ProjectiveMatrix::identity(p)), q);
  const auto xi = mat(0, -1, -1, 1, 23);
  // alpha = 5: a^7 = 17, a^9 = 11.
  EXPECT_EQ(apply(q, power(xi, 8)), ProjectivePoint(1, 17, p));
  EXPECT_EQ(apply(q, power(xi, 12)), ProjectivePoint(1, 11, p));
  EXPECT_EQ(element_order(xi), 24u);
}

TEST(ProjectiveMatrix, ApplyMatchesMoebiusOracle)
{
  for (std::int64_t q : {2, 3, 5, 7}) {
    const PrimeModulus p(q);
    const auto pts = enumerate_points(p);
    for (const auto& m : enumerate_matrices(p)) {
      for (const auto& x : pts) {
        const int img = oracle::moebius_index(m.a().value(), m.b().value(), m.c().value(), m.d().value(),
                                              static_cast<int>(x.index()), q);
        EXPECT_EQ(apply(x, m).index(), static_cast<std::uint32_t>(img));
      }
    }
  }
}

TEST(ProjectiveMatrix, RightActionLaw)
{
  for (std::int64_t q : {3, 5}) {
    const PrimeModulus p(q);
    const auto pts = enumerate_points(p);
    const auto all = enumerate_matrices(p);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto ab = compose(a, b);
        for (const auto& x : pts)
          ASSERT_EQ(apply(apply(x, a), b), apply(x, ab));
      }
  }
}

TEST(ProjectiveMatrix, MixedModuliRejected)
{
  const auto a = ProjectiveMatrix::identity(PrimeModulus(5));
  const auto b = ProjectiveMatrix::identity(PrimeModulus(7));
  EXPECT_THROW(compose(a, b), ModulusMismatch);
  EXPECT_THROW(apply(ProjectivePoint::infinity(PrimeModulus(7)), a), ModulusMismatch);
}
