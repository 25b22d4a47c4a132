//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "jordan/jordan.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace jordan;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what)
  {
    if (!cond) {
      ok = false;
      why << " [failed: " << what << "]";
    }
  }
};

RootPower integer(unsigned long v) { return RootPower::integer(BigInt(v)); }

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body)
{
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0)
    o.require(secs < limit_s, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_s) + " s");
  if (!o.ok)
    ++failures;
  std::printf("criterion %d: %s  %s (%.2f s)%s\n", n, o.ok ? "PASS" : "FAIL", title.c_str(), secs,
              o.why.str().c_str());
  std::fflush(stdout);
}

} // namespace

int main()
{
  criterion(1, "151! < 60^149 and 152! > 60^150", 1.0, [](Outcome& o) {
    o.require(cmp_root_powers(RootPower::integer(factorial(151)), RootPower(BigInt(60), PosRational(149, 1))) ==
                  Ordering::Less,
              "151! < 60^149");
    o.require(cmp_root_powers(RootPower::integer(factorial(152)), RootPower(BigInt(60), PosRational(150, 1))) ==
                  Ordering::Greater,
              "152! > 60^150");
  });

  criterion(2, "affine and symplectic maxima over q^m <= 2^16", 10.0, [](Outcome& o) {
    GridConfig grid;
    for (BoundKind k : all_bound_kinds) {
      GridMaximum g = grid_maximum(k, grid);
      GridPoint at = stated_argmax(k);
      o.require(cmp_root_powers(g.value, stated_maximum(k)) == Ordering::Equal, "max " + to_string(k));
      o.require(g.argmax.q == at.q && g.argmax.m == at.m, "argmax " + to_string(k));
      o.require(g.unique, "unique " + to_string(k));
    }
  });

  criterion(3, "brute-force matrix counts equal closed-form orders", 30.0, [](Outcome& o) {
    struct Case {
      MatrixKind kind;
      unsigned dim, q;
      unsigned long expected;
    };
    for (Case c : {Case{MatrixKind::GL, 2, 2, 6}, Case{MatrixKind::GL, 2, 3, 48}, Case{MatrixKind::GL, 3, 2, 168},
                   Case{MatrixKind::Sp, 2, 2, 6}, Case{MatrixKind::Sp, 4, 2, 720}}) {
      std::string tag = to_string(c.kind) + "(" + std::to_string(c.dim) + "," + std::to_string(c.q) + ")";
      BigInt brute = brute_force_matrix_order(c.kind, c.dim, c.q);
      o.require(brute == order_matrix_group(c.kind, c.dim, c.q), tag + " oracle");
      o.require(brute == c.expected, tag + " value");
    }
  });

  criterion(4, "14 < |J2|^(1/5) < 43/3 with exact witnesses", 1.0, [](Outcome& o) {
    RootPower j2 = mpr_lower(GroupSpec::sporadic("J2"));
    Comparison lo = compare(j2, integer(14));
    o.require(lo.ordering == Ordering::Greater, "> 14");
    o.require(lo.witness.kind == Witness::Kind::Exact && lo.witness.lhs == 604800 && lo.witness.rhs == 537824,
              "witness 537824 < 604800");
    Comparison hi = compare(RootPower(BigInt(604800) * 243, PosRational(1, 5)), integer(43));
    o.require(hi.ordering == Ordering::Less, "3^5 |J2| < 43^5");
    o.require(hi.witness.kind == Witness::Kind::Exact && hi.witness.lhs == 146966400 && hi.witness.rhs == 147008443,
              "witness 146966400 < 147008443");
  });

  criterion(5, "n!/n^n decreasing and n!^(1/(n-2)) increasing for 5 <= n <= 2000", 60.0, [](Outcome& o) {
    GridConfig grid;
    grid.max_sweep = 2000;
    Report r = run_claims(grid, {"factorial-ratio-decreasing", "factorial-root-increasing"});
    o.require(r.claims.size() == 2, "both sweeps registered");
    for (const ClaimCheck& c : r.claims) {
      o.require(c.actual == Actual::Pass, c.id);
      o.require(c.instances >= 1995, c.id + " covers the range");
    }
  });

  criterion(6, "prime-property bound calculator", 5.0, [](Outcome& o) {
    o.require(cmp_root_powers(prime_property_bound(5, PrimeProperty::Coprime).upper, integer(60)) == Ordering::Equal,
              "p = 5 coprime gives 60");
    BoundResult c157 = prime_property_bound(157, PrimeProperty::Coprime);
    o.require(cmp_root_powers(c157.upper, factorial_power(156, PosRational(1, 154))) == Ordering::Equal,
              "p = 157 base");
    o.require(c157.attainment && c157.attainment->group == "Sym_156" && c157.attainment->degree == 155,
              "attained by Sym_156 in degree 155");
    o.require(cmp_root_powers(prime_property_bound(11, PrimeProperty::AbelianSylow).upper, integer(60)) ==
                  Ordering::Equal,
              "p = 11 abelian Sylow gives 60");
    o.require(cmp_root_powers(prime_property_bound(13, PrimeProperty::AbelianSylow).upper,
                              factorial_power(168, PosRational(1, 166))) == Ordering::Equal,
              "p = 13 base");
  });

  criterion(7, "alternating bracket ordered and above 60 for 152 <= m <= 500", 60.0, [](Outcome& o) {
    for (unsigned long m = 152; m <= 500; ++m) {
      BoundResult b = alternating_bracket(m);
      o.require(b.lower && cmp_root_powers(*b.lower, b.upper) != Ordering::Greater, "ordered at " + std::to_string(m));
      o.require(cmp_root_powers(b.upper, integer(60)) == Ordering::Greater, "above 60 at " + std::to_string(m));
      if (!o.ok)
        return;
    }
  });

  criterion(8, "default verification report", 300.0, [](Outcome& o) {
    Report r = run_claims(GridConfig{}, {}, std::max(1u, std::thread::hardware_concurrency()));
    o.require(r.summary.fail_unexpected == 0, "no unexpected failures");
    o.require(r.summary.skipped == 0, "nothing skipped");
    auto find = [&](const std::string& id) -> const ClaimCheck* {
      for (const ClaimCheck& c : r.claims)
        if (c.id == id)
          return &c;
      return nullptr;
    };
    const ClaimCheck* psl = find("family-psl43-printed");
    const ClaimCheck* uni = find("family-unitary-odd-printed");
    const ClaimCheck* psl_group = find("family-psl43-companion");
    const ClaimCheck* uni_group = find("family-unitary-odd-le60");
    o.require(psl && psl->expected == Expected::KnownDiscrepancy && psl->actual == Actual::Fail, "3^(16/25) fails");
    o.require(psl && psl->witness.lhs == big_pow(3ul, 16) * big_pow(10ul, 75) &&
                  psl->witness.rhs == big_pow(2011ul, 25),
              "3^16 10^75 > 2011^25");
    o.require(uni && uni->expected == Expected::KnownDiscrepancy && uni->actual == Actual::Fail, "2^(10/3) fails");
    o.require(uni && uni->witness.lhs == BigInt("1024000000000") && uni->witness.rhs == BigInt("1023887723039"),
              "2^10 10^9 > 10079^3");
    o.require(psl_group && psl_group->actual == Actual::Pass, "|PSL(4,3)|^(1/25) < 2.011");
    o.require(uni_group && uni_group->actual == Actual::Pass, "unitary threshold <= 60");
    std::printf("  %s\n", summary_line(r.summary).c_str());
  });

  criterion(9, "alternating mpr upper crosses 60 between m = 151 and 152", 10.0, [](Outcome& o) {
    GridConfig grid;
    grid.max_alt = 200;
    auto specs = enumerate_specs({Family::Alternating}, grid);
    unsigned long first_above = 0;
    for (const GroupSpec& s : specs) {
      Ordering c = cmp_root_powers(mpr_upper(s, MprMode::Refined), integer(60));
      if (c == Ordering::Greater && first_above == 0)
        first_above = s.n();
      if (first_above != 0)
        o.require(c == Ordering::Greater, "stays above 60 at " + s.to_string());
    }
    o.require(first_above == 152, "first m above 60 is 152, got " + std::to_string(first_above));
  });

  return failures == 0 ? 0 : 1;
}
