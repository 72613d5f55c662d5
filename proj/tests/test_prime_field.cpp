#include <gtest/gtest.h>

#include "galois/prime_field.hpp"
#include "oracles.hpp"

using galois::Fp;
using galois::PrimeModulus;

namespace {

const std::vector<std::int64_t> kSmallPrimes{2, 3, 5, 7, 11, 13, 23, 59};

} // namespace

TEST(PrimeModulus, AcceptsPrimesRejectsTheRest)
{
  for (std::int64_t n = -3; n < 200; ++n) {
    if (oracle::is_prime(n))
      EXPECT_NO_THROW(PrimeModulus{n}) << n;
    else
      EXPECT_THROW(PrimeModulus{n}, galois::NotPrime) << n;
  }
  EXPECT_NO_THROW(PrimeModulus{2147483647});
  EXPECT_THROW(PrimeModulus{std::int64_t{1} << 31}, galois::NotPrime);
  EXPECT_THROW(PrimeModulus{2147483647LL * 2 + 1}, galois::NotPrime);
}

TEST(Fp, ReducesIntoCanonicalRange)
{
  const PrimeModulus p(23);
  EXPECT_EQ(Fp(-1, p).value(), 22u);
  EXPECT_EQ(Fp(-47, p).value(), 22u);
  EXPECT_EQ(Fp(46, p).value(), 0u);
  EXPECT_EQ(Fp(22, p).signed_value(), -1);
  EXPECT_EQ(Fp(11, p).signed_value(), 11);
  EXPECT_EQ(Fp(12, p).signed_value(), -11);
}

TEST(Fp, InverseExamples)
{
  EXPECT_EQ(galois::fp_inv(Fp(1, PrimeModulus(11))).value(), 1u);
  EXPECT_EQ(galois::fp_inv(Fp(2, PrimeModulus(23))).value(), 12u);
  EXPECT_EQ(galois::fp_inv(Fp(3, PrimeModulus(23))).value(), 8u);
  EXPECT_THROW(galois::fp_inv(Fp(0, PrimeModulus(23))), galois::ZeroInverse);
  EXPECT_THROW(Fp(1, PrimeModulus(5)) / Fp(5, PrimeModulus(5)), galois::ZeroInverse);
}

TEST(Fp, PowerExamples)
{
  EXPECT_EQ(galois::fp_pow(Fp(7, PrimeModulus(11)), 0).value(), 1u);
  EXPECT_EQ(galois::fp_pow(Fp(5, PrimeModulus(23)), 7).value(), 17u);
  EXPECT_EQ(galois::fp_pow(Fp(2, PrimeModulus(11)), 10).value(), 1u);
  EXPECT_EQ(galois::fp_pow(Fp(2, PrimeModulus(23)), -1).value(), 12u);
  EXPECT_THROW(galois::fp_pow(Fp(0, PrimeModulus(23)), -2), galois::ZeroInverse);
  EXPECT_EQ(galois::fp_pow(Fp(0, PrimeModulus(23)), 0).value(), 1u);
}

TEST(Fp, ArithmeticMatchesIntegerOracle)
{
  for (auto q : kSmallPrimes) {
    const PrimeModulus p(q);
    for (std::int64_t x = 0; x < q; ++x) {
      for (std::int64_t y = 0; y < q; ++y) {
        const Fp a(x, p), b(y, p);
        EXPECT_EQ((a + b).value(), oracle::mod(x + y, q));
        EXPECT_EQ((a - b).value(), oracle::mod(x - y, q));
        EXPECT_EQ((a * b).value(), oracle::mod(x * y, q));
        if (y != 0) {
          EXPECT_EQ((a / b).value(), oracle::mod(x * oracle::inverse(y, q), q));
        }
      }
      EXPECT_EQ((-Fp(x, p)).value(), oracle::mod(-x, q));
    }
  }
}

TEST(Fp, InverseAndFermatExhaustive)
{
  for (auto q : kSmallPrimes) {
    const PrimeModulus p(q);
    for (std::int64_t x = 1; x < q; ++x) {
      const Fp a(x, p);
      const auto b = galois::fp_inv(a);
      EXPECT_EQ(b.value(), oracle::inverse(x, q));
      EXPECT_EQ((a * b).value(), 1u);
      EXPECT_EQ(galois::fp_inv(b), a);
      EXPECT_EQ(galois::fp_pow(a, q - 1).value(), 1u);
      for (std::int64_t e = 0; e < 2 * q; e += 3)
        EXPECT_EQ(galois::fp_pow(a, e).value(), oracle::power(x, e, q));
    }
  }
}

TEST(Fp, PrimitiveElements)
{
  EXPECT_EQ(galois::primitive_element(PrimeModulus(11)).value(), 2u);
  EXPECT_EQ(galois::primitive_element(PrimeModulus(23)).value(), 5u);
  EXPECT_EQ(galois::primitive_element(PrimeModulus(59)).value(), 2u);
  for (std::int64_t q = 3; q < 200; q += 2) {
    if (!oracle::is_prime(q))
      continue;
    const PrimeModulus p(q);
    const auto g = galois::primitive_element(p);
    std::set<std::int64_t> seen;
    for (std::int64_t e = 1; e < q; ++e)
      seen.insert(oracle::power(g.value(), e, q));
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(q - 1)) << q;
    // Smallest such residue.
    for (std::int64_t h = 2; h < g.value(); ++h) {
      std::set<std::int64_t> s;
      for (std::int64_t e = 1; e < q; ++e)
        s.insert(oracle::power(h, e, q));
      EXPECT_LT(s.size(), static_cast<std::size_t>(q - 1)) << q << " " << h;
    }
  }
}

TEST(Fp, PrimeFactors)
{
  EXPECT_EQ(galois::prime_factors(60), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(galois::prime_factors(58), (std::vector<std::uint64_t>{2, 29}));
  EXPECT_EQ(galois::prime_factors(1), (std::vector<std::uint64_t>{}));
}
