#ifndef JORDAN_DEGREE_BOUNDS_HPP
#define JORDAN_DEGREE_BOUNDS_HPP

//! @file
//! Lower bounds (exact where known) for the least degree of a non-trivial
//! irreducible complex character of the Schur cover of a simple group.

#include "jordan/group_data.hpp"

#include <string>

namespace jordan {

struct DegreeBound {
  GroupSpec spec;
  BigInt d_lower;
  bool is_exact = false;
  std::string source;
};

namespace detail {

inline DegreeBound degree(const GroupSpec& s, BigInt d, bool exact, std::string source)
{
  return DegreeBound{s, std::move(d), exact, std::move(source)};
}

} // namespace detail

inline DegreeBound min_degree_lower(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  using detail::degree;
  const char* ls = "Landazuri-Seitz lower bound";
  const char* small = "small-rank exception (exceptional Schur multiplier or isomorphism)";

  if (s.family() == Family::Alternating) {
    switch (s.n()) {
    case 5: return degree(s, 2, true, "double cover of Alt(5)");
    case 6: return degree(s, 3, true, "triple cover of Alt(6)");
    case 7: return degree(s, 4, true, "double cover of Alt(7)");
    default: return degree(s, s.n() - 1, true, "Schur: deleted permutation module");
    }
  }
  if (s.family() == Family::Sporadic) {
    const SporadicRecord& r = data.sporadic_record(s.name());
    return degree(s, r.min_proj_degree, true, r.source);
  }
  if (is_exceptional(s.family())) {
    const ExceptionalRow& row = exceptional_row(s, data);
    return degree(s, eval_row_formula(row.degree, s), row.degree_exact, row.source);
  }

  BigInt Q(static_cast<unsigned long>(s.q()));
  const unsigned long n = s.n();
  const bool q_even = s.q() % 2 == 0;
  switch (s.family()) {
  case Family::PSL:
    if (n == 2) {
      if (s.q() == 4 || s.q() == 5)
        return degree(s, 2, true, "isomorphic to Alt(5)");
      if (s.q() == 9)
        return degree(s, 3, true, "isomorphic to Alt(6)");
      if (q_even)
        return degree(s, Q - 1, true, ls);
      return degree(s, (Q - 1) / 2, true, ls);
    }
    if (n == 3 && s.q() == 2)
      return degree(s, 3, true, "isomorphic to PSL(2,7)");
    if (n == 3 && s.q() == 4)
      return degree(s, 6, true, small);
    if (n == 4 && s.q() == 2)
      return degree(s, 7, true, "isomorphic to Alt(8)");
    if (n == 4 && s.q() == 3)
      return degree(s, 26, false, small);
    return degree(s, big_pow(Q, n - 1) + 1, false, ls);
  case Family::PSU:
    if (n == 4 && s.q() == 2)
      return degree(s, 4, true, "isomorphic to PSp(4,3)");
    if (n == 4 && s.q() == 3)
      return degree(s, 6, false, small);
    if (n % 2 == 0)
      return degree(s, (big_pow(Q, n) - 1) / (Q + 1), false, ls);
    return degree(s, (big_pow(Q, n) - Q) / (Q + 1), false, ls);
  case Family::PSp: {
    unsigned long k = s.rank();
    if (!q_even)
      return degree(s, (big_pow(Q, k) - 1) / 2, true, "Weil characters");
    BigInt qk1 = big_pow(Q, k - 1);
    return degree(s, qk1 * (qk1 - 1) * (Q - 1) / 2, false, ls);
  }
  case Family::POmegaOdd:
    return degree(s, (big_pow(Q, s.rank()) - 1) / 2, false, ls);
  case Family::POmegaPlus: {
    unsigned long k = s.rank();
    if (k == 4 && s.q() == 2)
      return degree(s, 8, true, "double cover of POmega+(8,2)");
    return degree(s, big_pow(Q, k - 2) * (big_pow(Q, k - 1) - 1), false, ls);
  }
  case Family::POmegaMinus: {
    unsigned long k = s.rank();
    if (q_even)
      return degree(s, big_pow(Q, k + 1) + Q - 1, false, ls);
    return degree(s, Q * (big_pow(Q, k) + 1) - 1, false, ls);
  }
  default: break;
  }
  fail(ErrorKind::InvalidParams, "unhandled family");
}

} // namespace jordan

#endif // JORDAN_DEGREE_BOUNDS_HPP
