#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace galois;

namespace {

bool has_failure(const PairCertificate& c, const std::string& what)
{
  return std::find(c.failures.begin(), c.failures.end(), what) != c.failures.end();
}

} // namespace

TEST(CheckPair, PassingExamples)
{
  const auto c = check_pair(fx::g1_11(), fx::g2_11(), fx::f11.inf());
  EXPECT_TRUE(c.passed);
  EXPECT_TRUE(c.failures.empty());
  EXPECT_EQ(c.degree, 12u);
  EXPECT_EQ(c.kind1, GroupKind::alt4());
  EXPECT_EQ(c.kind2, GroupKind::cyclic(12));
  EXPECT_EQ(c.intersection_size, 1u);
  EXPECT_EQ(c.orbit_length(), 12u);
  EXPECT_TRUE(c.orbit_equal);
  EXPECT_EQ(c.base_points_checked, 1u);

  const auto d = check_pair(fx::g1_59(), fx::g3_59(), fx::f59.inf());
  EXPECT_TRUE(d.passed);
  EXPECT_EQ(d.degree, 60u);
  EXPECT_EQ(d.kind1, GroupKind::alt5());
  EXPECT_EQ(d.kind2, GroupKind::dihedral(60));
}

TEST(CheckPair, SameGroupFails)
{
  const auto g = fx::g1_11();
  const auto c = check_pair(g, g, fx::f11.inf());
  EXPECT_FALSE(c.passed);
  EXPECT_TRUE(has_failure(c, kFailNotDifferent));
  EXPECT_TRUE(has_failure(c, kFailIntersection));
  EXPECT_EQ(c.intersection_size, 12u);
}

TEST(CheckPair, ListsEveryViolation)
{
  // <sigma, tau> is a Klein four inside G1: orders, meet and orbits all fail.
  const auto g = fx::g1_11();
  const auto v = fx::f11.group({fx::sigma11(), fx::tau11()});
  const auto c = check_pair(g, v, fx::f11.inf());
  EXPECT_FALSE(c.passed);
  EXPECT_FALSE(has_failure(c, kFailNotDifferent));
  EXPECT_TRUE(has_failure(c, kFailOrdersDiffer));
  EXPECT_TRUE(has_failure(c, kFailIntersection));
  EXPECT_TRUE(has_failure(c, kFailOrbitsDiffer));
  EXPECT_EQ(c.intersection_size, 4u);
}

TEST(CheckPair, IrregularOrbit)
{
  // t -> -t fixes (0:1), where its orbit is a single point; t -> 1/t moves it.
  const auto a = fx::f23.group({fx::f23.m(-1, 0, 0, 1)});
  const auto b = fx::f23.group({fx::f23.m(0, 1, 1, 0)});
  ASSERT_EQ(apply(fx::f23.inf(), fx::f23.m(-1, 0, 0, 1)), fx::f23.inf());
  const auto c = check_pair(a, b, fx::f23.inf());
  EXPECT_FALSE(c.passed);
  EXPECT_TRUE(has_failure(c, kFailOrbitNotRegular));
}

TEST(CheckPair, Symmetric)
{
  const std::vector<Subgroup> gs{fx::g1_11(), fx::g2_11(), fx::g3_11(), conjugate(fx::g1_11(), fx::iota11()),
                                 fx::f11.group({fx::sigma11()})};
  for (const auto& g : gs)
    for (const auto& h : gs)
      for (const auto& q : enumerate_points(PrimeModulus(11)))
        EXPECT_EQ(check_pair(g, h, q).passed, check_pair(h, g, q).passed);
}

TEST(CheckPair, ModulusMismatch)
{
  EXPECT_THROW(check_pair(fx::g1_11(), fx::g1_23(), fx::f11.inf()), ModulusMismatch);
  EXPECT_THROW(check_pair(fx::g1_11(), fx::g2_11(), fx::f23.inf()), ModulusMismatch);
  EXPECT_THROW(check_pair_all_basepoints(fx::g1_11(), fx::g1_23()), ModulusMismatch);
}

TEST(CheckPairAll, Examples)
{
  const auto c = check_pair_all_basepoints(fx::g1_11(), fx::g2_11());
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.base_points_checked, 12u);
  const auto g4 = conjugate(fx::g1_23(), fx::iota23());
  const auto d = check_pair_all_basepoints(fx::g1_23(), g4);
  EXPECT_TRUE(d.passed);
  EXPECT_EQ(d.base_points_checked, 24u);
  const auto t = Subgroup::trivial(PrimeModulus(11));
  EXPECT_FALSE(check_pair_all_basepoints(t, t).passed);
}

TEST(CheckPairAll, AgreesWithPerPointLoop)
{
  const std::vector<Subgroup> gs{fx::g1_11(), fx::g2_11(), fx::g3_11(), conjugate(fx::g1_11(), fx::iota11()),
                                 fx::f11.group({fx::sigma11()}), fx::f11.group({fx::sigmap11()})};
  for (const auto& g : gs)
    for (const auto& h : gs) {
      bool all = true;
      std::vector<bool> verdicts;
      for (const auto& q : enumerate_points(PrimeModulus(11))) {
        verdicts.push_back(check_pair(g, h, q).passed);
        all = all && verdicts.back();
      }
      EXPECT_EQ(check_pair_all_basepoints(g, h).passed, all);
      // Regular groups of order p + 1: the verdict cannot depend on Q.
      if (g.order() == 12 && h.order() == 12 && is_transitive(g) && is_transitive(h)) {
        EXPECT_EQ(std::count(verdicts.begin(), verdicts.end(), verdicts.front()), 12);
      }
    }
}

TEST(CheckPair, ReverifiesFromGenerators)
{
  const auto c = check_pair_all_basepoints(fx::g1_11(), fx::g3_11());
  ASSERT_TRUE(c.passed);
  const auto again = check_pair_all_basepoints(generate_closure(c.p, c.g1), generate_closure(c.p, c.g2));
  EXPECT_EQ(again.passed, c.passed);
  EXPECT_EQ(again.failures, c.failures);
  EXPECT_EQ(again.kind1, c.kind1);
  EXPECT_EQ(again.kind2, c.kind2);
  EXPECT_EQ(again.orbit1, c.orbit1);
}
