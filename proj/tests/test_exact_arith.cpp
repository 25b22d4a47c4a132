#include "jordan/exact_arith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jordan;

namespace {

RootPower rp(long base, long num, long den) { return RootPower(BigInt(base), PosRational(num, den)); }

RootPower random_small(std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> b(1, 1000), e(1, 12);
  return rp(b(rng), e(rng), e(rng));
}

} // namespace

TEST(PosRational, ReducesToLowestTerms)
{
  PosRational r(14, 8);
  EXPECT_EQ(r.num(), 7);
  EXPECT_EQ(r.den(), 4);
  EXPECT_THROW(PosRational(0, 3), Error);
}

TEST(RootPower, BaseOneCanonicalises)
{
  RootPower one(BigInt(1), PosRational(5, 7));
  EXPECT_TRUE(one.exp().is_one());
  EXPECT_THROW(RootPower(BigInt(0), PosRational()), Error);
}

TEST(Compare, SpecExamples)
{
  EXPECT_EQ(cmp_root_powers(rp(24, 1, 3), rp(168, 1, 7)), Ordering::Greater);
  EXPECT_EQ(cmp_root_powers(rp(720, 1, 3), rp(720, 1, 3)), Ordering::Equal);
  RootPower f151 = RootPower::integer(factorial(151));
  EXPECT_EQ(cmp_root_powers(f151, rp(60, 149, 1)), Ordering::Less);
  RootPower f152 = RootPower::integer(factorial(152));
  EXPECT_EQ(cmp_root_powers(f152, rp(60, 150, 1)), Ordering::Greater);
}

TEST(Compare, ValueEqualityAcrossRepresentations)
{
  EXPECT_EQ(cmp_root_powers(rp(8, 1, 3), rp(2, 1, 1)), Ordering::Equal);
  EXPECT_EQ(cmp_root_powers(rp(7, 3, 2), rp(49, 3, 4)), Ordering::Equal);
  EXPECT_EQ(cmp_root_powers(rp(1, 1, 1), rp(1, 9, 2)), Ordering::Equal);
  // a huge equal pair must go through the perfect-power stage, not exact powering
  BigInt big = factorial(3000);
  RootPower a(big * big, PosRational(1, 2998));
  RootPower b(big, PosRational(1, 1499));
  Comparison c = compare(a, b);
  EXPECT_EQ(c.ordering, Ordering::Equal);
}

TEST(Compare, WitnessMatchesCrossPowering)
{
  Comparison c = compare(rp(604800, 1, 5), rp(14, 1, 1));
  ASSERT_EQ(c.witness.kind, Witness::Kind::Exact);
  EXPECT_EQ(c.witness.lhs, 604800);
  EXPECT_EQ(c.witness.rhs, 537824);
  EXPECT_EQ(c.ordering, Ordering::Greater);
}

TEST(Compare, IntervalPathAgreesWithExactPath)
{
  CompareConfig intervals_only;
  intervals_only.exact_first_bits = 0;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    RootPower a = random_small(rng), b = random_small(rng);
    int o = oracle::cross_cmp(a.base(), a.exp().num().get_ui(), a.exp().den().get_ui(), b.base(),
                              b.exp().num().get_ui(), b.exp().den().get_ui());
    Ordering expect = o < 0 ? Ordering::Less : o > 0 ? Ordering::Greater : Ordering::Equal;
    EXPECT_EQ(cmp_root_powers(a, b, intervals_only), expect) << a.to_string() << " vs " << b.to_string();
  }
}

TEST(Compare, AntisymmetryOnRandomSample)
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    RootPower a = random_small(rng), b = random_small(rng);
    EXPECT_EQ(cmp_root_powers(a, b), reverse(cmp_root_powers(b, a)));
  }
}

TEST(Compare, Transitivity)
{
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> b(1, 1000000), e(1, 50);
  for (int i = 0; i < 300; ++i) {
    RootPower x[3] = {rp(b(rng), e(rng), e(rng)), rp(b(rng), e(rng), e(rng)), rp(b(rng), e(rng), e(rng))};
    Ordering ab = cmp_root_powers(x[0], x[1]);
    Ordering bc = cmp_root_powers(x[1], x[2]);
    Ordering ac = cmp_root_powers(x[0], x[2]);
    if (ab != Ordering::Greater && bc != Ordering::Greater) {
      EXPECT_NE(ac, Ordering::Greater);
    }
    if (ab != Ordering::Less && bc != Ordering::Less) {
      EXPECT_NE(ac, Ordering::Less);
    }
  }
}

TEST(Compare, AgreesWithFloatingWhenWellSeparated)
{
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    RootPower a = random_small(rng), b = random_small(rng);
    long double va = oracle::approx(a.base(), a.exp().num().get_ui(), a.exp().den().get_ui());
    long double vb = oracle::approx(b.base(), b.exp().num().get_ui(), b.exp().den().get_ui());
    if (!std::isfinite(va) || !std::isfinite(vb) || std::fabs(va - vb) <= 1e-6L * std::max(va, vb))
      continue;
    ++checked;
    EXPECT_EQ(cmp_root_powers(a, b), va < vb ? Ordering::Less : Ordering::Greater);
  }
  EXPECT_GT(checked, 1000);
}

TEST(Compare, LargeFactorialRootsUseIntervals)
{
  // m!^(1/(m-2)) increasing near m = 5000; cross powers would have ~10^8 bits
  RootPower a = factorial_power(5000, PosRational(1, 4998));
  RootPower b = factorial_power(5001, PosRational(1, 4999));
  Comparison c = compare(a, b);
  EXPECT_EQ(c.ordering, Ordering::Less);
  EXPECT_EQ(c.witness.kind, Witness::Kind::Interval);
}

TEST(Compare, ResourceExceededWhenBudgetTooSmall)
{
  CompareConfig tight;
  tight.exact_first_bits = 0;
  tight.max_precision = 64;
  tight.digit_budget = 10;
  // values differ by far less than 2^-64 relative
  BigInt n = big_pow(BigInt(10), 40);
  RootPower a(n, PosRational(1, 1));
  RootPower b(n + 1, PosRational(1, 1));
  EXPECT_EQ(cmp_root_powers(a, b), Ordering::Less); // equal exponents short-circuit
  RootPower c(n * n + 1, PosRational(1, 2));
  try {
    cmp_root_powers(a, c, tight);
    FAIL() << "expected ResourceExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceExceeded);
  }
  EXPECT_EQ(cmp_root_powers(a, c), Ordering::Less);
}

TEST(LnBounds, EnclosesKnownValues)
{
  for (long n : {2L, 3L, 10L, 1000003L}) {
    DyadicInterval l = ln_bounds(BigInt(n), 80);
    long double lo = std::ldexp(l.lo.get_d(), -80), hi = std::ldexp(l.hi.get_d(), -80);
    long double v = std::log(static_cast<long double>(n));
    EXPECT_LE(lo, v * (1 + 1e-15L));
    EXPECT_GE(hi, v * (1 - 1e-15L));
    EXPECT_LT(BigInt(l.hi - l.lo), 1 << 10);
  }
  // ln(2^k) = k ln 2 must be enclosed even when the input is truncated
  DyadicInterval l2 = ln_bounds(BigInt(2), 200);
  DyadicInterval lk = ln_bounds(big_pow(BigInt(2), 5000), 200);
  EXPECT_LE(lk.lo, BigInt(l2.hi * 5000));
  EXPECT_GE(lk.hi, BigInt(l2.lo * 5000));
}

TEST(Factorial, MatchesNaiveProduct)
{
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  for (unsigned long n : {1UL, 17UL, 100UL, 1234UL})
    EXPECT_EQ(factorial(n), oracle::naive_factorial(n));
}

TEST(Envelope, SpecExamples)
{
  RootPower a = envelope_f(2, 3, 1, 3);
  EXPECT_EQ(a.base(), 3);
  EXPECT_EQ(a.exp(), PosRational(5, 2));
  EXPECT_EQ(envelope_f(2, 1, 2, 3).exp(), PosRational(5, 4));
  EXPECT_EQ(envelope_f(2, 3, 2, 3).exp(), PosRational(7, 4));
  try {
    envelope_f(0, 0, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateExponent);
  }
}

TEST(Envelope, DecreasingInY)
{
  const std::pair<unsigned long, unsigned long> ab[] = {{1, 0}, {1, 1}, {2, 1}, {2, 3}};
  for (auto [a, b] : ab)
    for (unsigned long x = 1; x <= 10; ++x)
      for (unsigned long y = 2; y <= 50; ++y) {
        if (oracle::naive_pow(mpz_class(y), x) < 3)
          continue;
        EXPECT_EQ(cmp_root_powers(envelope_f(a, b, x, y + 1), envelope_f(a, b, x, y)), Ordering::Less)
            << a << "," << b << "," << x << "," << y;
      }
}

TEST(EBounds, SpecExamples)
{
  EBounds e3 = e_bounds(3);
  EXPECT_EQ(e3.lower, PosRational(8, 3));
  EXPECT_EQ(e3.upper, PosRational(49, 18));
  EBounds e1 = e_bounds(1);
  EXPECT_EQ(e1.lower, PosRational(2, 1));
  EXPECT_EQ(e1.upper, PosRational(3, 1));
  EBounds e10 = e_bounds(10);
  // e truncated to ten places lies strictly inside the interval
  PosRational probe(2718281828, 1000000000);
  EXPECT_EQ(cmp(e10.lower, probe), Ordering::Less);
  EXPECT_EQ(cmp(probe, e10.upper), Ordering::Less);
  EXPECT_EQ(e10.upper.num() * e10.lower.den() - e10.lower.num() * e10.upper.den(),
            e10.lower.den() * e10.upper.den() / (oracle::naive_factorial(10) * 10));
}

TEST(EBounds, Nested)
{
  for (unsigned k = 1; k < 25; ++k) {
    EBounds a = e_bounds(k), b = e_bounds(k + 1);
    EXPECT_EQ(cmp(a.lower, b.lower), Ordering::Less);
    EXPECT_EQ(cmp(b.upper, a.upper), Ordering::Less);
  }
}

TEST(Scale, FoldsFactorIntoBase)
{
  RootPower x = scale(rp(604800, 1, 5), BigInt(3));
  EXPECT_EQ(x.base(), 604800 * 243);
  EXPECT_EQ(cmp_root_powers(x, rp(43, 1, 1)), Ordering::Less);
}

TEST(PerfectPower, Roots)
{
  EXPECT_EQ(perfect_power_root(BigInt(64)), std::make_pair(BigInt(2), BigInt(6)));
  EXPECT_EQ(perfect_power_root(BigInt(36)), std::make_pair(BigInt(6), BigInt(2)));
  EXPECT_EQ(perfect_power_root(BigInt(720)), std::make_pair(BigInt(720), BigInt(1)));
}
