#ifndef JORDAN_CLAIM_HPP
#define JORDAN_CLAIM_HPP

//! @file
//! A checked inequality between two exact values, and the sweep grid.

#include "jordan/exact_arith.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace jordan {

struct GridConfig {
  /// cap on q^m for the affine/symplectic grid and on q^rank for classical groups
  std::uint64_t max_qm = 65536;
  /// largest prime q on the affine/symplectic grid
  std::uint64_t max_prime = 65536;
  /// alternating degrees 5..max_alt are swept in threshold checks
  unsigned long max_alt = 200;
  /// upper end of the factorial sweeps
  unsigned long max_sweep = 2000;
  /// largest field size for exceptional families
  std::uint64_t max_exceptional_q = 256;

  void validate() const
  {
    if (max_qm < 16)
      fail(ErrorKind::InvalidParams, "grid needs max_qm >= 16");
    if (max_prime < 3)
      fail(ErrorKind::InvalidParams, "grid needs max_prime >= 3");
    if (max_alt < 152)
      fail(ErrorKind::InvalidParams, "grid needs max_alt >= 152");
    if (max_sweep < 152)
      fail(ErrorKind::InvalidParams, "grid needs max_sweep >= 152");
    if (max_exceptional_q < 8)
      fail(ErrorKind::InvalidParams, "grid needs max_exceptional_q >= 8");
  }
};

enum class Relation { Less, LessEq, Equal, Greater, GreaterEq };
enum class Expected { Pass, KnownDiscrepancy, Unresolved };
enum class Actual { Pass, Fail, SkippedResource };

inline std::string to_string(Relation r)
{
  switch (r) {
  case Relation::Less: return "<";
  case Relation::LessEq: return "<=";
  case Relation::Equal: return "=";
  case Relation::Greater: return ">";
  case Relation::GreaterEq: return ">=";
  }
  return "?";
}

inline std::string to_string(Expected e)
{
  switch (e) {
  case Expected::Pass: return "Pass";
  case Expected::KnownDiscrepancy: return "KnownDiscrepancy";
  case Expected::Unresolved: return "Unresolved";
  }
  return "?";
}

inline std::string to_string(Actual a)
{
  switch (a) {
  case Actual::Pass: return "Pass";
  case Actual::Fail: return "Fail";
  case Actual::SkippedResource: return "Skipped-Resource";
  }
  return "?";
}

inline bool holds(Relation r, Ordering o)
{
  switch (r) {
  case Relation::Less: return o == Ordering::Less;
  case Relation::LessEq: return o != Ordering::Greater;
  case Relation::Equal: return o == Ordering::Equal;
  case Relation::Greater: return o == Ordering::Greater;
  case Relation::GreaterEq: return o != Ordering::Less;
  }
  return false;
}

struct ClaimCheck {
  std::string id;
  std::string statement;
  RootPower lhs;
  Relation relation = Relation::Less;
  RootPower rhs;
  Expected expected = Expected::Pass;
  Actual actual = Actual::Fail;
  Ordering ordering = Ordering::Equal;
  Witness witness;
  /// explanation for non-Pass expectations, or the range covered by a sweep
  std::string comment;
  /// number of instances checked; the recorded lhs/rhs is the decisive one
  std::size_t instances = 1;
};

/// Compares lhs and rhs exactly; the expectation never influences the outcome.
inline ClaimCheck check_claim(std::string id, std::string statement, const RootPower& lhs, Relation rel,
                              const RootPower& rhs, Expected expected = Expected::Pass,
                              std::string comment = {}, const CompareConfig& cfg = {})
{
  ClaimCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.lhs = lhs;
  c.relation = rel;
  c.rhs = rhs;
  c.expected = expected;
  c.comment = std::move(comment);
  try {
    Comparison cmp = compare(lhs, rhs, cfg);
    c.ordering = cmp.ordering;
    c.witness = std::move(cmp.witness);
    c.actual = holds(rel, c.ordering) ? Actual::Pass : Actual::Fail;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceExceeded)
      throw;
    c.actual = Actual::SkippedResource;
    c.witness.kind = Witness::Kind::Structural;
    c.witness.note = e.what();
  }
  return c;
}

/// Checks rel over gen(0..count-1), each returning a (lhs, rhs) pair. The aggregate records the
/// first failing instance, or else the instance with the smallest approximate gap.
template <class Gen>
ClaimCheck sweep_claim(std::string id, std::string statement, std::size_t count, Gen gen, Relation rel,
                       std::string range, Expected expected = Expected::Pass, const CompareConfig& cfg = {})
{
  if (count == 0)
    fail(ErrorKind::InvalidParams, "empty sweep " + id);
  ClaimCheck decisive;
  bool have = false;
  double best_gap = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::pair<RootPower, RootPower> sides = gen(i);
    ClaimCheck c = check_claim(id, statement, sides.first, rel, sides.second, expected, range, cfg);
    if (c.actual != Actual::Pass) {
      decisive = std::move(c);
      have = true;
      break;
    }
    double gap = std::fabs(approx_log10(sides.first) - approx_log10(sides.second));
    if (!have || gap < best_gap) {
      decisive = std::move(c);
      best_gap = gap;
      have = true;
    }
  }
  decisive.instances = count;
  return decisive;
}

inline RootPower integer_value(const BigInt& n, std::string label = {})
{
  return RootPower::integer(n, std::move(label));
}

inline RootPower integer_value(unsigned long n) { return RootPower::integer(BigInt(n)); }

} // namespace jordan

#endif // JORDAN_CLAIM_HPP
