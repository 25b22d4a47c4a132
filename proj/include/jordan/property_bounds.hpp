#ifndef JORDAN_PROPERTY_BOUNDS_HPP
#define JORDAN_PROPERTY_BOUNDS_HPP

//! @file
//! Calculator for the growth constants of a property of finite groups that is
//! inherited by normal subgroups and quotients, driven by the largest alternating
//! group with the property.

#include "jordan/claim.hpp"
#include "jordan/group_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jordan {

/// largest_alt values below 5 mean no Alt_m with m >= 5 has the property
inline constexpr unsigned long none_above_4 = 4;
/// largest alternating degree for which every threshold value stays at most 60
inline constexpr unsigned long alt_threshold = 151;

enum class PresetKind { Solvable, CoprimeTo, AbelianSylow, SylowClassAtMost };

struct Preset {
  PresetKind kind = PresetKind::Solvable;
  std::uint64_t p = 0;
  std::uint64_t k = 0;

  static Preset solvable() { return {PresetKind::Solvable, 0, 0}; }
  static Preset coprime_to(std::uint64_t p) { return {PresetKind::CoprimeTo, p, 0}; }
  static Preset abelian_sylow(std::uint64_t p) { return {PresetKind::AbelianSylow, p, 0}; }
  static Preset sylow_class_at_most(std::uint64_t p, std::uint64_t k) { return {PresetKind::SylowClassAtMost, p, k}; }

  std::string to_string() const
  {
    switch (kind) {
    case PresetKind::Solvable: return "solvable";
    case PresetKind::CoprimeTo: return "order coprime to " + std::to_string(p);
    case PresetKind::AbelianSylow: return "abelian Sylow " + std::to_string(p) + "-subgroups";
    case PresetKind::SylowClassAtMost:
      return "Sylow " + std::to_string(p) + "-subgroups of class at most " + std::to_string(k);
    }
    return "?";
  }
};

namespace detail {

inline void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    fail(ErrorKind::InvalidParams, std::to_string(p) + " is not prime");
}

inline std::uint64_t checked_pow(std::uint64_t p, unsigned e)
{
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > UINT64_MAX / p)
      fail(ErrorKind::InvalidParams, "parameters too large");
    v *= p;
  }
  return v;
}

} // namespace detail

/// Nilpotency class of a Sylow p-subgroup of Sym_n: 0 if n < p, 1 if n < p^2, else p^r
/// for the r with p^(r+1) <= n < p^(r+2).
inline std::uint64_t sylow_class_sym(std::uint64_t p, std::uint64_t n)
{
  detail::require_prime(p);
  if (n < p)
    return 0;
  if (n / p < p)
    return 1;
  unsigned r = 0;
  std::uint64_t v = p; // p^(r+1)
  while (v <= n / p) {
    v *= p;
    ++r;
  }
  return detail::checked_pow(p, r);
}

/// Largest m such that Alt_m has the preset property (values below 5: none_above_4).
inline unsigned long largest_alt(const Preset& pr)
{
  switch (pr.kind) {
  case PresetKind::Solvable: return none_above_4;
  case PresetKind::CoprimeTo:
    detail::require_prime(pr.p);
    return pr.p == 2 ? 3 : pr.p - 1;
  case PresetKind::AbelianSylow:
    detail::require_prime(pr.p);
    return pr.p == 2 ? 5 : pr.p * pr.p - 1;
  case PresetKind::SylowClassAtMost: {
    detail::require_prime(pr.p);
    if (pr.k < 1)
      fail(ErrorKind::InvalidParams, "class bound must be at least 1");
    unsigned r = 0; // floor(log_p k)
    for (std::uint64_t v = pr.p; v <= pr.k; v *= pr.p)
      ++r;
    return detail::checked_pow(pr.p, r + 2) - 1;
  }
  }
  return none_above_4;
}

struct PropertyDescriptor {
  unsigned long largest_alt = none_above_4;
  bool sym_m_in_as = false;
  bool has_sl25 = false;
  bool has_3alt6 = false;
  bool has_2alt7 = false;
  /// no almost simple group of the residual primitive kind has the property
  bool residual_empty = false;
  std::optional<Preset> preset;
  std::string caveat;

  bool has_large_alt() const { return largest_alt >= 5; }

  /// Descriptor derived from a preset; the cover flags are set only where the
  /// relevant Sylow subgroups are known to qualify.
  static PropertyDescriptor from_preset(const Preset& pr)
  {
    PropertyDescriptor d;
    d.preset = pr;
    d.largest_alt = jordan::largest_alt(pr);
    switch (pr.kind) {
    case PresetKind::Solvable: break;
    case PresetKind::CoprimeTo:
      // |SL(2,5)| = 120, |3.Alt6| = 1080, |2.Alt7| = 5040
      d.sym_m_in_as = d.has_large_alt();
      d.has_sl25 = pr.p > 5;
      d.has_3alt6 = pr.p > 5;
      d.has_2alt7 = pr.p > 7;
      break;
    case PresetKind::AbelianSylow:
      d.sym_m_in_as = pr.p != 2;
      d.has_sl25 = pr.p != 2;
      d.has_3alt6 = pr.p > 3;
      d.has_2alt7 = pr.p != 2;
      break;
    case PresetKind::SylowClassAtMost:
      d.sym_m_in_as = true;
      if (pr.p == 2)
        d.caveat = "largest alternating degree uses the symmetric group class formula as a proxy";
      break;
    }
    return d;
  }
};

struct Attainment {
  std::string group;
  unsigned long degree = 0;

  std::string to_string() const { return group + " in degree " + std::to_string(degree); }
};

struct BoundResult {
  std::optional<RootPower> lower;
  RootPower upper;
  std::string provenance;
  std::optional<Attainment> attainment;
  /// exact checks supporting the result (thresholds, chain links)
  std::vector<ClaimCheck> certificates;
};

namespace detail {

inline RootPower sixty() { return RootPower::integer(BigInt(60)); }

inline RootPower cube_root_720() { return RootPower(BigInt(720), PosRational(1, 3)); }

inline void check_bracket(const BoundResult& r)
{
  if (r.lower && cmp_root_powers(*r.lower, r.upper) == Ordering::Greater)
    fail(ErrorKind::Inconsistent, "lower bound " + r.lower->to_string() + " exceeds upper bound " +
                                      r.upper.to_string());
}

} // namespace detail

/// m <= 151 (or no alternating factor): upper 60. Otherwise (m!/2)^(1/(m-1)) <= ... <= m!^(1/(m-2)).
inline BoundResult alternating_bracket(unsigned long m)
{
  BoundResult r;
  if (m <= alt_threshold) {
    r.upper = detail::sixty();
    r.provenance = "largest alternating degree at most 151: all constants at most 60";
    return r;
  }
  r.lower = RootPower(factorial(m) / 2, PosRational(BigInt(1), BigInt(m - 1)), std::to_string(m) + "!/2");
  r.upper = factorial_power(m, PosRational(BigInt(1), BigInt(m - 2)));
  r.provenance = "largest alternating degree m > 151: (m!/2)^(1/(m-1)) <= constants <= m!^(1/(m-2))";
  r.certificates.push_back(check_claim("bracket-" + std::to_string(m), "lower <= upper at m = " + std::to_string(m),
                                       *r.lower, Relation::LessEq, r.upper));
  return r;
}

/// 1 when the residual class is empty, 60 when m <= 151, else m!^(1/(m-2)).
inline RootPower ell_upper(const PropertyDescriptor& d)
{
  if (d.residual_empty)
    return RootPower::integer(BigInt(1));
  if (d.largest_alt <= alt_threshold)
    return detail::sixty();
  return factorial_power(d.largest_alt, PosRational(BigInt(1), BigInt(d.largest_alt - 2)));
}

struct AlphaBetaGamma {
  BoundResult alpha;
  BoundResult beta;
  BoundResult gamma;
};

inline AlphaBetaGamma alpha_beta_gamma(const PropertyDescriptor& d)
{
  AlphaBetaGamma out;
  if (d.preset && d.preset->kind == PresetKind::Solvable) {
    RootPower six = RootPower::integer(BigInt(6));
    RootPower tf = RootPower::integer(BigInt(24));
    out.alpha = {six, six, "solvable groups: alpha = 6 exactly", std::nullopt, {}};
    out.beta = {std::nullopt, max_of(detail::cube_root_720(), six), "beta <= max{720^(1/3), alpha}", std::nullopt, {}};
    out.gamma = {tf, tf, "solvable groups: gamma = 24 exactly", std::nullopt, {}};
    return out;
  }

  const RootPower ell = ell_upper(d);
  const unsigned long m = d.largest_alt;

  // alpha
  out.alpha.upper = max_of(detail::cube_root_720(), ell);
  out.alpha.provenance = "alpha <= max{720^(1/3), l} with l = " + ell.to_string();
  std::vector<std::pair<RootPower, std::string>> lows;
  if (d.has_sl25)
    lows.emplace_back(detail::sixty(), "SL(2,5) has the property");
  if (d.has_3alt6)
    lows.emplace_back(RootPower(BigInt(360), PosRational(1, 2)), "3.Alt6 has the property");
  if (d.has_2alt7)
    lows.emplace_back(RootPower(BigInt(2520), PosRational(1, 3)), "2.Alt7 has the property");
  if (m >= 5) {
    PosRational e(BigInt(1), BigInt(m - 2));
    lows.emplace_back(RootPower(factorial(m) / 2, e, std::to_string(m) + "!/2"), "Alt_m has the property");
    if (d.sym_m_in_as)
      lows.emplace_back(factorial_power(m, e), "Sym_m has the property");
  }
  for (auto& [v, why] : lows) {
    if (!out.alpha.lower || cmp_root_powers(v, *out.alpha.lower) == Ordering::Greater) {
      out.alpha.lower = v;
      out.alpha.provenance += "; lower from " + why;
    }
  }
  detail::check_bracket(out.alpha);

  // beta
  out.beta.upper = max_of(detail::cube_root_720(), out.alpha.upper);
  out.beta.provenance = "beta <= max{720^(1/3), alpha}";

  // gamma: the smaller of max{24, l} and 4 alpha
  RootPower via_ell = max_of(RootPower::integer(BigInt(24)), ell);
  RootPower via_alpha = scale(out.alpha.upper, BigInt(4));
  bool ell_wins = cmp_root_powers(via_ell, via_alpha) != Ordering::Greater;
  out.gamma.upper = ell_wins ? via_ell : via_alpha;
  out.gamma.provenance = "gamma <= min{max{24, l} = " + via_ell.to_string() + ", 4 alpha = " +
                         via_alpha.to_string() + "}";
  return out;
}

enum class PrimeProperty { Coprime, AbelianSylow };

inline std::string to_string(PrimeProperty k) { return k == PrimeProperty::Coprime ? "coprime" : "abelian-sylow"; }

/// Bound on the index of an abelian normal subgroup (per degree, or at degree n) of a
/// finite linear group whose order is coprime to p, or whose Sylow p-subgroups are abelian.
/// With refinements on, p = 2 and abelian Sylow gives 60^((n-1)/2) (stated without proof).
inline BoundResult prime_property_bound(std::uint64_t p, PrimeProperty kind, std::optional<unsigned long> n = {},
                                        bool refinements = false)
{
  detail::require_prime(p);
  if (n && *n < 1)
    fail(ErrorKind::InvalidParams, "degree must be at least 1");
  BoundResult r;
  unsigned long m = kind == PrimeProperty::Coprime ? static_cast<unsigned long>(p - 1)
                                                   : static_cast<unsigned long>(p * p - 1);
  std::string what = kind == PrimeProperty::Coprime ? "order coprime to p" : "abelian Sylow p-subgroups";
  RootPower base;
  if (m <= alt_threshold) {
    base = detail::sixty();
    r.provenance = what + ", largest alternating degree " + std::to_string(m) + " <= 151: base 60";
  } else {
    base = factorial_power(m, PosRational(BigInt(1), BigInt(m - 2)));
    r.provenance = what + ", largest alternating degree " + std::to_string(m) + ": base " + std::to_string(m) +
                   "!^(1/" + std::to_string(m - 2) + ")";
    r.attainment = Attainment{"Sym_" + std::to_string(m), m - 1};
    r.certificates.push_back(check_claim("base-above-60", "base exceeds 60", base, Relation::Greater,
                                         detail::sixty()));
  }
  if (!n) {
    r.upper = base;
    return r;
  }
  if (*n == 1) {
    r.upper = RootPower::integer(BigInt(1));
    r.provenance += "; degree 1: index 1";
    return r;
  }
  PosRational e(BigInt(*n - 1), BigInt(1));
  if (refinements && kind == PrimeProperty::AbelianSylow && p == 2) {
    r.upper = RootPower(BigInt(60), PosRational(BigInt(*n - 1), BigInt(2)));
    r.provenance += "; refinement for p = 2: 60^((n-1)/2), stated without full proof";
    return r;
  }
  r.upper = pow(base, e);
  r.provenance += "; raised to n - 1 = " + std::to_string(*n - 1);
  return r;
}

/// A finite subgroup of GL(n,C) whose largest alternating composition factor is Alt_m
/// has an abelian normal subgroup of index bounded by this chain.
inline BoundResult abelian_index_chain(unsigned long n, std::optional<unsigned long> m = {})
{
  if (n < 1)
    fail(ErrorKind::InvalidParams, "degree must be at least 1");
  if (m && *m < 5)
    fail(ErrorKind::InvalidParams, "alternating degree must be at least 5");
  if (m && *m >= 8 && *m > n + 1)
    fail(ErrorKind::Inconsistent, "Alt_" + std::to_string(*m) + " has no faithful projective representation of degree " +
                                      std::to_string(n) + " (needs m <= n + 1); this would force m! <= 2^(m-2)");
  BoundResult r;
  if (!m || *m <= alt_threshold) {
    r.upper = n == 1 ? RootPower::integer(BigInt(1)) : RootPower(BigInt(60), PosRational(BigInt(n - 1), BigInt(1)));
    r.provenance = "largest alternating factor at most Alt_151: index at most 60^(n-1)";
    return r;
  }
  unsigned long mm = *m;
  r.lower = RootPower::integer(factorial(mm) / 2, std::to_string(mm) + "!/2");
  if (n == 1)
    fail(ErrorKind::Inconsistent, "degree 1 cannot involve Alt_" + std::to_string(mm));
  r.upper = factorial_power(mm, PosRational(BigInt(n - 1), BigInt(mm - 2)));
  r.provenance = "m!/2 <= index <= m!^((n-1)/(m-2)) <= (n+1)!";
  RootPower top = factorial_power(n + 1, PosRational(1, 1));
  r.certificates.push_back(check_claim("chain-lower", "m!/2 <= m!^((n-1)/(m-2))", *r.lower, Relation::LessEq, r.upper));
  r.certificates.push_back(check_claim("chain-upper", "m!^((n-1)/(m-2)) <= (n+1)!", r.upper, Relation::LessEq, top));
  detail::check_bracket(r);
  return r;
}

} // namespace jordan

#endif // JORDAN_PROPERTY_BOUNDS_HPP
