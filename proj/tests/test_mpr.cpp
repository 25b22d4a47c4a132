#include "jordan/mpr.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace jordan;

namespace {

RootPower integer(long v) { return RootPower::integer(BigInt(v)); }

} // namespace

TEST(MprLower, Examples)
{
  EXPECT_EQ(cmp_root_powers(mpr_lower(GroupSpec::alternating(5)), integer(60)), Ordering::Equal);

  RootPower j2 = mpr_lower(GroupSpec::sporadic("J2"));
  EXPECT_EQ(j2.base(), 604800);
  EXPECT_EQ(j2.exp(), PosRational(1, 5));
  EXPECT_EQ(cmp_root_powers(j2, integer(14)), Ordering::Greater);
  EXPECT_EQ(cmp_root_powers(j2, RootPower(BigInt(43), PosRational(1, 1))), Ordering::Less);
  EXPECT_LT(BigInt(604800) * 243, oracle::naive_pow(43, 5));
  EXPECT_LT(oracle::naive_pow(14, 5), BigInt(604800));

  RootPower a200 = mpr_lower(GroupSpec::alternating(200));
  EXPECT_EQ(a200.base() * 2, oracle::naive_factorial(200));
  EXPECT_EQ(a200.exp(), PosRational(1, 198));
}

TEST(MprUpper, J2UsesInertiaOverride)
{
  RootPower up = mpr_upper(GroupSpec::sporadic("J2"), MprMode::Refined);
  EXPECT_EQ(cmp_root_powers(up, RootPower(BigInt(604800), PosRational(1, 5))), Ordering::Equal);
  MprEstimate e = mpr_estimate(GroupSpec::sporadic("J2"));
  EXPECT_EQ(e.mode, MprMode::Exact);
}

TEST(MprUpper, CrudeIsSquareOfLower)
{
  for (const GroupSpec& s : {GroupSpec::psl(3, 5), GroupSpec::sporadic("M24"), GroupSpec::psu(4, 3),
                             GroupSpec::exceptional(Family::G2, 5), GroupSpec::alternating(12)}) {
    RootPower crude = mpr_upper(s, MprMode::Crude);
    BigInt d = min_degree_lower(s).d_lower;
    EXPECT_EQ(cmp_root_powers(crude, RootPower(order_simple(s), PosRational(BigInt(2), d - 1))), Ordering::Equal);
    EXPECT_NE(cmp_root_powers(mpr_upper(s, MprMode::Refined), crude), Ordering::Greater) << s.to_string();
  }
  EXPECT_THROW(mpr_upper(GroupSpec::psl(3, 5), MprMode::Exact), Error);
}

TEST(MprUpper, Alternating152CrossesSixty)
{
  RootPower up = mpr_upper(GroupSpec::alternating(152), MprMode::Refined);
  EXPECT_EQ(cmp_root_powers(up, factorial_power(152, PosRational(1, 150))), Ordering::Equal);
  EXPECT_EQ(cmp_root_powers(up, integer(60)), Ordering::Greater);
  RootPower up151 = mpr_upper(GroupSpec::alternating(151), MprMode::Refined);
  EXPECT_EQ(cmp_root_powers(up151, integer(60)), Ordering::Less);
}

TEST(MprExact, Alternating)
{
  EXPECT_EQ(mpr_exact_alternating(152).to_string(), "152!^(1/150)");
  EXPECT_EQ(mpr_exact_alternating(200).to_string(), "200!^(1/198)");
  try {
    mpr_exact_alternating(151);
    FAIL() << "expected OutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(MprExact, AlternatingIncreasing)
{
  for (unsigned long m = 152; m < 400; ++m)
    EXPECT_EQ(cmp_root_powers(mpr_exact_alternating(m), mpr_exact_alternating(m + 1)), Ordering::Less) << m;
}

TEST(MprThreshold, SporadicsBelowFifteen)
{
  auto checks = verify_mpr_threshold(std::vector<Family>{Family::Sporadic}, integer(15), GridConfig{}, Relation::Less);
  ASSERT_EQ(checks.size(), 26u);
  for (const ClaimCheck& c : checks)
    EXPECT_EQ(c.actual, Actual::Pass) << c.id;
}

TEST(MprThreshold, EvenPsl2BelowSqrt8)
{
  RootPower sqrt8(BigInt(8), PosRational(1, 2));
  for (unsigned f = 3; f <= 20; ++f) {
    std::uint64_t q = std::uint64_t{1} << f;
    GroupSpec s = GroupSpec::psl(2, q);
    RootPower lo = mpr_lower(s);
    EXPECT_NE(cmp_root_powers(lo, sqrt8), Ordering::Greater) << q;
    EXPECT_NE(cmp_root_powers(lo, RootPower(BigInt(static_cast<unsigned long>(q)), PosRational(3, q - 2))),
              Ordering::Greater);
  }
}

TEST(MprThreshold, AlternatingBoundary)
{
  std::vector<GroupSpec> specs;
  for (unsigned long m = 5; m <= 152; ++m)
    specs.push_back(GroupSpec::alternating(m));
  auto checks = verify_mpr_threshold(specs, integer(60), Relation::LessEq);
  ASSERT_EQ(checks.size(), specs.size());
  for (std::size_t i = 0; i + 1 < checks.size(); ++i)
    EXPECT_EQ(checks[i].actual, Actual::Pass) << checks[i].id;
  EXPECT_EQ(checks.back().actual, Actual::Fail);
}

TEST(MprInvariant, LowerNotAboveUpperWithExactDegree)
{
  GridConfig grid;
  grid.max_qm = 1024;
  grid.max_prime = 1024;
  grid.max_alt = 160;
  grid.max_exceptional_q = 32;
  auto fams = lie_families();
  fams.push_back(Family::Alternating);
  fams.push_back(Family::Sporadic);
  std::size_t checked = 0;
  for (const GroupSpec& s : enumerate_specs(fams, grid)) {
    MprLower lo = mpr_lower_detailed(s);
    if (lo.heuristic)
      continue;
    ++checked;
    EXPECT_NE(cmp_root_powers(lo.value, mpr_upper(s, MprMode::Refined)), Ordering::Greater) << s.to_string();
  }
  EXPECT_GT(checked, 200u);
}

TEST(Enumerate, SkipsNonSimpleAndSorts)
{
  GridConfig grid;
  grid.max_qm = 64;
  grid.max_prime = 64;
  auto specs = enumerate_specs({Family::PSL, Family::PSU, Family::PSp}, grid);
  for (const GroupSpec& s : specs) {
    EXPECT_FALSE(s.family() == Family::PSL && s.n() == 2 && s.q() < 4);
    EXPECT_FALSE(s.family() == Family::PSU && s.n() == 3 && s.q() == 2);
    EXPECT_FALSE(s.family() == Family::PSp && s.n() == 4 && s.q() == 2);
  }
  EXPECT_FALSE(specs.empty());
}
