#include "jordan/degree_bounds.hpp"
#include "jordan/mpr.hpp"

#include <gtest/gtest.h>

using namespace jordan;

TEST(MinDegree, Examples)
{
  DegreeBound psl43 = min_degree_lower(GroupSpec::psl(4, 3));
  EXPECT_EQ(psl43.d_lower, 26);
  EXPECT_FALSE(psl43.is_exact);

  DegreeBound psl28 = min_degree_lower(GroupSpec::psl(2, 8));
  EXPECT_EQ(psl28.d_lower, 7);
  EXPECT_TRUE(psl28.is_exact);

  DegreeBound a9 = min_degree_lower(GroupSpec::alternating(9));
  EXPECT_EQ(a9.d_lower, 8);
  EXPECT_TRUE(a9.is_exact);

  DegreeBound sz8 = min_degree_lower(GroupSpec::exceptional(Family::Suzuki, 8));
  EXPECT_EQ(sz8.d_lower, 14);
  EXPECT_TRUE(sz8.is_exact);
}

TEST(MinDegree, SmallAlternatingCovers)
{
  EXPECT_EQ(min_degree_lower(GroupSpec::alternating(5)).d_lower, 2);
  EXPECT_EQ(min_degree_lower(GroupSpec::alternating(6)).d_lower, 3);
  EXPECT_EQ(min_degree_lower(GroupSpec::alternating(7)).d_lower, 4);
  for (unsigned long m = 8; m <= 300; ++m) {
    DegreeBound d = min_degree_lower(GroupSpec::alternating(m));
    EXPECT_EQ(d.d_lower, m - 1);
    EXPECT_TRUE(d.is_exact);
  }
}

TEST(MinDegree, IsomorphicSpecsAgree)
{
  for (const auto& [a, b] : known_isomorphisms())
    EXPECT_EQ(min_degree_lower(a).d_lower, min_degree_lower(b).d_lower) << a.to_string() << " vs " << b.to_string();
}

TEST(MinDegree, AtLeastTwoOnGrid)
{
  GridConfig grid;
  grid.max_qm = 4096;
  grid.max_prime = 4096;
  grid.max_alt = 160;
  grid.max_exceptional_q = 64;
  auto fams = lie_families();
  fams.push_back(Family::Alternating);
  fams.push_back(Family::Sporadic);
  auto specs = enumerate_specs(fams, grid);
  ASSERT_GT(specs.size(), 1000u);
  for (const GroupSpec& s : specs) {
    DegreeBound d = min_degree_lower(s);
    EXPECT_GE(d.d_lower, 2) << s.to_string();
    EXPECT_FALSE(d.source.empty()) << s.to_string();
  }
}

TEST(MinDegree, SymplecticEvenConsistency)
{
  for (unsigned long k = 2; k <= 6; ++k)
    for (std::uint64_t q : {2, 4, 8, 16, 32}) {
      if (k == 2 && q == 2)
        continue;
      BigInt qk = big_pow(BigInt(static_cast<unsigned long>(q)), k);
      EXPECT_GE(min_degree_lower(GroupSpec::psp(2 * k, q)).d_lower, qk - 2) << k << "," << q;
    }
}

TEST(MinDegree, SymplecticOddIsWeil)
{
  for (unsigned long k = 2; k <= 5; ++k)
    for (std::uint64_t q : {3, 5, 7, 9}) {
      DegreeBound d = min_degree_lower(GroupSpec::psp(2 * k, q));
      EXPECT_EQ(d.d_lower, (big_pow(BigInt(static_cast<unsigned long>(q)), k) - 1) / 2);
      EXPECT_TRUE(d.is_exact);
    }
}

TEST(MinDegree, PslLargeRankRule)
{
  for (unsigned long n = 3; n <= 7; ++n)
    for (std::uint64_t q : {3, 5, 7, 8}) {
      if (n == 4 && q == 3)
        continue;
      EXPECT_EQ(min_degree_lower(GroupSpec::psl(n, q)).d_lower,
                big_pow(BigInt(static_cast<unsigned long>(q)), n - 1) + 1);
    }
}

TEST(MinDegree, SporadicFromTable)
{
  EXPECT_EQ(min_degree_lower(GroupSpec::sporadic("J2")).d_lower, 6);
  EXPECT_EQ(min_degree_lower(GroupSpec::sporadic("Suz")).d_lower, 12);
  EXPECT_THROW(min_degree_lower(GroupSpec::sporadic("Foo")), Error);
}
