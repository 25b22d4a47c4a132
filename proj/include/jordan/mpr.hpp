#ifndef JORDAN_MPR_HPP
#define JORDAN_MPR_HPP

//! @file
//! Bounds for the maximum projective ratio
//!   mpr(X) = max over non-trivial chi of (|X| [I(chi):L])^(1/(chi(1)-1)),
//! bracketed by |X|^(1/(d-1)) <= mpr(X) <= |Aut X|^(1/(d-1)).

#include "jordan/claim.hpp"
#include "jordan/degree_bounds.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace jordan {

enum class MprMode { Crude, Refined, Exact };

inline std::string to_string(MprMode m)
{
  return m == MprMode::Crude ? "Crude" : m == MprMode::Refined ? "Refined" : "Exact";
}

struct MprEstimate {
  GroupSpec spec;
  RootPower lower;
  RootPower upper;
  MprMode mode = MprMode::Refined;
  /// lower used a degree bound d' that may be below the true d
  bool lower_heuristic = false;
};

struct MprLower {
  RootPower value;
  bool heuristic = false;
};

namespace detail {

/// |X| * k with a factorial-style label for alternating groups.
inline RootPower order_times(const GroupSpec& s, const BigInt& order, const BigInt& k, const PosRational& e)
{
  std::string label;
  if (s.family() == Family::Alternating && s.n() >= 8) {
    std::string m = std::to_string(s.n());
    if (k == 1)
      label = m + "!/2";
    else if (k == 2)
      label = m + "!";
  }
  return RootPower(order * k, e, label);
}

inline PosRational inverse(const BigInt& d) { return PosRational(BigInt(1), d); }

} // namespace detail

inline MprLower mpr_lower_detailed(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  DegreeBound d = min_degree_lower(s, data);
  BigInt order = order_simple(s, data);
  return {detail::order_times(s, order, 1, detail::inverse(d.d_lower - 1)), !d.is_exact};
}

/// |X|^(1/(d-1)); heuristic (see mpr_lower_detailed) when only d' is known.
inline RootPower mpr_lower(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  return mpr_lower_detailed(s, data).value;
}

/// Verified inertia index for characters of the given degree, if tabulated.
inline std::optional<InertiaOverride> inertia_override(const GroupSpec& s, const BigInt& degree,
                                                       const DataTables& data = DataTables::embedded())
{
  std::string key = s.to_string();
  for (const auto& r : data.inertia())
    if (r.group == key && BigInt(r.degree) == degree)
      return r;
  return std::nullopt;
}

/// Crude: |X|^(2/(d'-1)). Refined: (|X| |Out X|)^(1/(d'-1)), or with an inertia override at the
/// exact minimal degree d, max{(|X| idx)^(1/(d-1)), (|X| |Out X|)^(1/d)}.
inline RootPower mpr_upper(const GroupSpec& s, MprMode mode, const DataTables& data = DataTables::embedded())
{
  DegreeBound d = min_degree_lower(s, data);
  BigInt order = order_simple(s, data);
  if (mode == MprMode::Crude)
    return RootPower(order, PosRational(BigInt(2), BigInt(d.d_lower - 1)));
  if (mode != MprMode::Refined)
    fail(ErrorKind::InvalidParams, "mpr_upper takes Crude or Refined");
  BigInt out = out_order(s, data);
  if (d.is_exact) {
    if (auto ov = inertia_override(s, d.d_lower, data)) {
      RootPower at_d = detail::order_times(s, order, BigInt(ov->verified_index), detail::inverse(d.d_lower - 1));
      RootPower above = detail::order_times(s, order, out, detail::inverse(d.d_lower));
      return max_of(at_d, above);
    }
  }
  return detail::order_times(s, order, out, detail::inverse(d.d_lower - 1));
}

/// m!^(1/(m-2)), the exact value for m > 151.
inline RootPower mpr_exact_alternating(unsigned long m)
{
  if (m <= 151)
    fail(ErrorKind::OutOfRange, "the closed form holds only for m > 151");
  return factorial_power(m, PosRational(BigInt(1), BigInt(m - 2)));
}

inline MprEstimate mpr_estimate(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  MprLower lo = mpr_lower_detailed(s, data);
  RootPower up = mpr_upper(s, MprMode::Refined, data);
  if (s.family() == Family::Alternating && s.n() > 151) {
    RootPower exact = mpr_exact_alternating(s.n());
    return {s, exact, exact, MprMode::Exact, false};
  }
  if (!lo.heuristic && cmp_root_powers(lo.value, up) == Ordering::Equal)
    return {s, lo.value, up, MprMode::Exact, false};
  return {s, lo.value, up, MprMode::Refined, lo.heuristic};
}

// ---------------------------------------------------------------------------
// enumeration over the grid

namespace detail {

inline std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q)
    if (prime_power(q))
      out.push_back(q);
  return out;
}

/// q^k <= limit without overflow
inline bool power_within(std::uint64_t q, unsigned long k, std::uint64_t limit)
{
  std::uint64_t v = 1;
  for (unsigned long i = 0; i < k; ++i) {
    if (v > limit / q)
      return false;
    v *= q;
  }
  return true;
}

} // namespace detail

/// All simple groups of the selected families inside the grid, in canonical order.
///
/// Classical groups are taken with q^(n-1) <= max_qm (linear and unitary) or
/// q^rank <= max_qm (symplectic and orthogonal); exceptional families with
/// q <= max_exceptional_q; alternating groups with 5 <= m <= max_alt.
inline std::vector<GroupSpec> enumerate_specs(const std::vector<Family>& families, const GridConfig& grid,
                                              const DataTables& data = DataTables::embedded())
{
  std::vector<GroupSpec> out;
  const std::vector<std::uint64_t> qs = detail::prime_powers_upto(grid.max_qm);
  auto selected = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };

  if (selected(Family::Alternating))
    for (unsigned long m = 5; m <= grid.max_alt; ++m)
      out.push_back(GroupSpec::alternating(m));
  if (selected(Family::Sporadic))
    for (const auto& r : data.sporadic())
      out.push_back(GroupSpec::sporadic(r.name));
  for (std::uint64_t q : qs) {
    if (selected(Family::PSL))
      for (unsigned long n = 2; detail::power_within(q, n - 1, grid.max_qm); ++n)
        if (!(n == 2 && q < 4))
          out.push_back(GroupSpec::psl(n, q));
    if (selected(Family::PSU))
      for (unsigned long n = 3; detail::power_within(q, n - 1, grid.max_qm); ++n)
        if (!(n == 3 && q == 2))
          out.push_back(GroupSpec::psu(n, q));
    if (selected(Family::PSp))
      for (unsigned long k = 2; detail::power_within(q, k, grid.max_qm); ++k)
        if (!(k == 2 && q == 2))
          out.push_back(GroupSpec::psp(2 * k, q));
    if (selected(Family::POmegaOdd) && q % 2 == 1)
      for (unsigned long k = 3; detail::power_within(q, k, grid.max_qm); ++k)
        out.push_back(GroupSpec::omega_odd(2 * k + 1, q));
    if (selected(Family::POmegaPlus))
      for (unsigned long k = 4; detail::power_within(q, k, grid.max_qm); ++k)
        out.push_back(GroupSpec::omega_plus(2 * k, q));
    if (selected(Family::POmegaMinus))
      for (unsigned long k = 4; detail::power_within(q, k, grid.max_qm); ++k)
        out.push_back(GroupSpec::omega_minus(2 * k, q));
    if (q > grid.max_exceptional_q)
      continue;
    PrimePower pp = *prime_power(q);
    for (Family f : all_families) {
      if (!is_exceptional(f) || !selected(f))
        continue;
      bool twisted_odd = pp.f % 2 == 1 && pp.f >= 3;
      if ((f == Family::Suzuki || f == Family::Ree2F4) && !(pp.p == 2 && twisted_odd))
        continue;
      if (f == Family::Ree2G2 && !(pp.p == 3 && twisted_odd))
        continue;
      if (f == Family::G2 && q == 2)
        continue;
      out.push_back(GroupSpec::exceptional(f, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Family> lie_families()
{
  std::vector<Family> out;
  for (Family f : all_families)
    if (is_lie_type(f))
      out.push_back(f);
  return out;
}

/// One check per group: Refined mpr upper bound against the threshold.
inline std::vector<ClaimCheck> verify_mpr_threshold(const std::vector<GroupSpec>& specs, const RootPower& threshold,
                                                    Relation rel = Relation::LessEq,
                                                    const DataTables& data = DataTables::embedded())
{
  std::vector<ClaimCheck> out;
  out.reserve(specs.size());
  for (const GroupSpec& s : specs) {
    RootPower up;
    std::string mode = "refined";
    try {
      up = mpr_upper(s, MprMode::Refined, data);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingData)
        throw;
      up = mpr_upper(s, MprMode::Crude, data);
      mode = "crude";
    }
    out.push_back(check_claim("mpr/" + s.to_string(), "mpr upper (" + mode + ") of " + s.to_string(), up, rel,
                              threshold));
  }
  return out;
}

inline std::vector<ClaimCheck> verify_mpr_threshold(const std::vector<Family>& families, const RootPower& threshold,
                                                    const GridConfig& grid, Relation rel = Relation::LessEq,
                                                    const DataTables& data = DataTables::embedded())
{
  return verify_mpr_threshold(enumerate_specs(families, grid, data), threshold, rel, data);
}

} // namespace jordan

#endif // JORDAN_MPR_HPP
