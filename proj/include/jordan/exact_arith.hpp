#ifndef JORDAN_EXACT_ARITH_HPP
#define JORDAN_EXACT_ARITH_HPP

//! @file
//! Exact values of the form base^(num/den) and a certified total order on them.
//!
//! Comparison never rounds: it either decides by exact integer cross-powering
//! or by disjoint certified enclosures of exp * ln(base), computed with a
//! rational atanh series whose truncation error is bounded explicitly.

#include "jordan/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace jordan {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt big_pow(unsigned long base, unsigned long e)
{
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b)
{
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b)
{
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::size_t bit_length(const BigInt& n)
{
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool fits_ulong(const BigInt& n) { return n >= 0 && n.fits_ulong_p(); }

// ---------------------------------------------------------------------------
// PosRational

/// Positive rational in lowest terms.
class PosRational {
public:
  PosRational() : num_(1), den_(1) {}

  PosRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
  {
    if (num_ < 1 || den_ < 1)
      fail(ErrorKind::InvalidParams, "PosRational needs num >= 1 and den >= 1");
    BigInt g = big_gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  PosRational(long num, long den) : PosRational(BigInt(num), BigInt(den)) {}

  static PosRational integer(const BigInt& n) { return PosRational(n, BigInt(1)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_one() const { return num_ == 1 && den_ == 1; }

  friend bool operator==(const PosRational& a, const PosRational& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend PosRational operator*(const PosRational& a, const PosRational& b)
  {
    return PosRational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend PosRational operator+(const PosRational& a, const PosRational& b)
  {
    return PosRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  std::string to_string() const
  {
    return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
  }

private:
  BigInt num_;
  BigInt den_;
};

enum class Ordering { Less, Equal, Greater };

inline Ordering reverse(Ordering o)
{
  return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o;
}

inline std::string to_string(Ordering o)
{
  return o == Ordering::Less ? "Less" : o == Ordering::Equal ? "Equal" : "Greater";
}

template <typename T>
Ordering three_way(const T& a, const T& b)
{
  return a < b ? Ordering::Less : b < a ? Ordering::Greater : Ordering::Equal;
}

inline Ordering cmp(const PosRational& a, const PosRational& b)
{
  return three_way(BigInt(a.num() * b.den()), BigInt(b.num() * a.den()));
}

// ---------------------------------------------------------------------------
// RootPower

/// The real number base^(num/den), base >= 1.
///
/// The label is a display hint for bases built from factorials ("156!",
/// "200!/2"); it never participates in comparison or equality.
class RootPower {
public:
  RootPower() : base_(1), exp_() {}

  RootPower(BigInt base, PosRational exp, std::string label = {})
      : base_(std::move(base)), exp_(std::move(exp)), label_(std::move(label))
  {
    if (base_ < 1)
      fail(ErrorKind::InvalidParams, "RootPower base must be >= 1");
    if (base_ == 1) {
      exp_ = PosRational();
      label_.clear();
    }
  }

  static RootPower integer(BigInt n, std::string label = {})
  {
    return RootPower(std::move(n), PosRational(), std::move(label));
  }

  static RootPower root(BigInt n, const BigInt& k, std::string label = {})
  {
    return RootPower(std::move(n), PosRational(BigInt(1), k), std::move(label));
  }

  const BigInt& base() const { return base_; }
  const PosRational& exp() const { return exp_; }
  const std::string& label() const { return label_; }

  /// Field equality; value equality goes through cmp_root_powers.
  bool same_representation(const RootPower& o) const { return base_ == o.base_ && exp_ == o.exp_; }

  std::string base_string(std::size_t max_digits = 40) const
  {
    if (!label_.empty())
      return label_;
    std::size_t digits = mpz_sizeinbase(base_.get_mpz_t(), 10);
    if (digits > max_digits)
      return "[" + std::to_string(digits) + "-digit integer]";
    return base_.get_str();
  }

  std::string to_string(std::size_t max_digits = 40) const
  {
    std::string b = base_string(max_digits);
    if (exp_.is_one())
      return b;
    if (exp_.den() == 1)
      return b + "^" + exp_.num().get_str();
    return b + "^(" + exp_.num().get_str() + "/" + exp_.den().get_str() + ")";
  }

private:
  BigInt base_;
  PosRational exp_;
  std::string label_;
};

/// x^r, i.e. the exponent multiplied by r.
inline RootPower pow(const RootPower& x, const PosRational& r)
{
  return RootPower(x.base(), x.exp() * r, x.label());
}

/// k * x as a single radical (k^den * base^num)^(1/den). Needs num to fit a machine word.
inline RootPower scale(const RootPower& x, const BigInt& k)
{
  if (k < 1)
    fail(ErrorKind::InvalidParams, "scale factor must be positive");
  if (!fits_ulong(x.exp().num()) || !fits_ulong(x.exp().den()))
    fail(ErrorKind::ResourceExceeded, "exponent too large to fold a scale factor into the base");
  unsigned long num = x.exp().num().get_ui();
  unsigned long den = x.exp().den().get_ui();
  return RootPower(big_pow(k, den) * big_pow(x.base(), num), PosRational(BigInt(1), BigInt(den)));
}

// ---------------------------------------------------------------------------
// factorial

namespace detail {

inline BigInt product_range(unsigned long lo, unsigned long hi)
{
  // product of lo..hi inclusive
  if (lo > hi)
    return 1;
  if (hi - lo < 16) {
    BigInt r = lo;
    for (unsigned long i = lo + 1; i <= hi; ++i)
      r *= i;
    return r;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return product_range(lo, mid) * product_range(mid + 1, hi);
}

} // namespace detail

inline BigInt factorial(unsigned long n)
{
  if (n < 2)
    return 1;
  return detail::product_range(2, n);
}

inline RootPower factorial_power(unsigned long n, const PosRational& exp)
{
  return RootPower(factorial(n), exp, std::to_string(n) + "!");
}

// ---------------------------------------------------------------------------
// rational bounds for e

struct EBounds {
  PosRational lower;
  PosRational upper;
  unsigned terms = 0;
};

/// lower = sum_{i=0}^{terms} 1/i!, upper = lower + 1/(terms! * terms).
inline EBounds e_bounds(unsigned terms)
{
  if (terms < 1)
    fail(ErrorKind::InvalidParams, "e_bounds needs terms >= 1");
  // sum_{i=0}^{k} k!/i! over k!
  BigInt kf = factorial(terms);
  BigInt numer = 0;
  BigInt t = 1; // k!/i! for i = k down to 0
  for (unsigned long i = terms;; --i) {
    numer += t;
    if (i == 0)
      break;
    t *= i;
  }
  PosRational lower(numer, kf);
  PosRational upper = lower + PosRational(BigInt(1), BigInt(kf * terms));
  return {lower, upper, terms};
}

// ---------------------------------------------------------------------------
// f_{(a,b)}(x, y) = y^((a x^2 + b x) / (y^x - 1))

inline RootPower envelope_f(unsigned long a, unsigned long b, unsigned long x, unsigned long y)
{
  if (x < 1 || y < 2)
    fail(ErrorKind::InvalidParams, "envelope_f needs x >= 1 and y >= 2");
  BigInt numer = BigInt(a) * x * x + BigInt(b) * x;
  if (numer == 0)
    fail(ErrorKind::DegenerateExponent, "a*x^2 + b*x = 0");
  BigInt den = big_pow(y, x) - 1;
  return RootPower(BigInt(y), PosRational(numer, den));
}

// ---------------------------------------------------------------------------
// certified logarithms

/// Dyadic enclosure lo / 2^precision <= value <= hi / 2^precision.
struct DyadicInterval {
  BigInt lo;
  BigInt hi;
  unsigned precision = 0;
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b)
{
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt shl(const BigInt& a, std::size_t s)
{
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), s);
  return r;
}

inline BigInt floor_shr(const BigInt& a, std::size_t s)
{
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), s);
  return r;
}

inline BigInt ceil_shr(const BigInt& a, std::size_t s)
{
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), s);
  return r;
}

/// Enclosure of atanh(num/den) scaled by 2^work, for 0 <= num < den and num/den <= 1/3.
/// Sum of z^(2j+1)/(2j+1) with every term rounded outward, plus the geometric tail
/// z^(2J+1) / ((2J+1)(1 - z^2)).
inline std::pair<BigInt, BigInt> atanh_scaled(const BigInt& num, const BigInt& den, unsigned work)
{
  if (num == 0)
    return {0, 0};
  BigInt num2 = num * num;
  BigInt den2 = den * den;
  BigInt one = shl(BigInt(1), work);
  BigInt p_lo = floor_div(num * one, den); // z^(2j+1) * 2^work, lower
  BigInt p_hi = ceil_div(num * one, den);
  BigInt s_lo = 0, s_hi = 0;
  for (unsigned long j = 0;; ++j) {
    unsigned long k = 2 * j + 1;
    s_lo += floor_div(p_lo, BigInt(k));
    s_hi += ceil_div(p_hi, BigInt(k));
    p_lo = floor_div(p_lo * num2, den2);
    p_hi = ceil_div(p_hi * num2, den2);
    if (p_hi < 256) {
      // remaining terms sum to at most p_hi / ((k + 2)(1 - z^2))
      s_hi += ceil_div(p_hi * den2, BigInt(k + 2) * (den2 - num2));
      break;
    }
  }
  return {s_lo, s_hi};
}

/// Enclosure of ln(a) scaled by 2^work for a positive integer a of modest size.
inline std::pair<BigInt, BigInt> ln_small_scaled(const BigInt& a, unsigned work,
                                                 const std::pair<BigInt, BigInt>& ln2)
{
  if (a == 1)
    return {0, 0};
  std::size_t k = bit_length(a) - 1;
  BigInt pk = shl(BigInt(1), k);
  // pick k so that a / 2^k lies in [2/3, 4/3]
  if (3 * a > 4 * pk) {
    ++k;
    pk = shl(BigInt(1), k);
  }
  BigInt num = a - pk;
  BigInt den = a + pk;
  bool negative = num < 0;
  if (negative)
    num = -num;
  auto [t_lo, t_hi] = atanh_scaled(num, den, work);
  BigInt y_lo = negative ? BigInt(-2 * t_hi) : BigInt(2 * t_lo);
  BigInt y_hi = negative ? BigInt(-2 * t_lo) : BigInt(2 * t_hi);
  return {BigInt(ln2.first * k + y_lo), BigInt(ln2.second * k + y_hi)};
}

} // namespace detail

/// Certified enclosure of ln(n) for n >= 1 at the given precision.
inline DyadicInterval ln_bounds(const BigInt& n, unsigned precision)
{
  if (n < 1)
    fail(ErrorKind::InvalidParams, "ln_bounds needs n >= 1");
  if (n == 1)
    return {0, 0, precision};
  const unsigned guard = 32;
  const unsigned work = precision + guard;
  auto ln2 = detail::atanh_scaled(BigInt(1), BigInt(3), work);
  ln2.first *= 2;
  ln2.second *= 2;

  // keep only the leading bits: n lies in [m * 2^s, (m + 1) * 2^s)
  std::size_t bl = bit_length(n);
  std::size_t keep = work + 8;
  std::size_t shift = bl > keep ? bl - keep : 0;
  BigInt m = detail::floor_shr(n, shift);
  BigInt lo, hi;
  if (shift == 0) {
    auto r = detail::ln_small_scaled(m, work, ln2);
    lo = r.first;
    hi = r.second;
  } else {
    lo = detail::ln_small_scaled(m, work, ln2).first;
    hi = detail::ln_small_scaled(BigInt(m + 1), work, ln2).second;
    lo += ln2.first * shift;
    hi += ln2.second * shift;
  }
  return {detail::floor_shr(lo, guard), detail::ceil_shr(hi, guard), precision};
}

/// Certified enclosure of exp * ln(base) for a RootPower.
inline DyadicInterval log_bounds(const RootPower& x, unsigned precision)
{
  DyadicInterval l = ln_bounds(x.base(), precision);
  const BigInt& p = x.exp().num();
  const BigInt& q = x.exp().den();
  return {detail::floor_div(l.lo * p, q), detail::ceil_div(l.hi * p, q), precision};
}

/// Approximate log10 of the value, for display only.
inline double approx_log10(const RootPower& x)
{
  DyadicInterval l = log_bounds(x, 64);
  BigInt mid = l.lo + l.hi;
  // mid / 2^65 is ln(x)
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, mid.get_mpz_t());
  double ln = std::ldexp(m, static_cast<int>(exp2) - 65);
  return ln / std::log(10.0);
}

inline std::string approx_decimal(const RootPower& x, int significant = 6)
{
  double l10 = approx_log10(x);
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  if (mant >= 10.0) {
    mant /= 10.0;
    e += 1;
  }
  char buf[64];
  if (e >= -4 && e < 15) {
    std::snprintf(buf, sizeof buf, "%.*g", significant, std::pow(10.0, l10));
  } else {
    std::snprintf(buf, sizeof buf, "%.*fe%+d", significant - 1, mant, static_cast<int>(e));
  }
  return buf;
}

// ---------------------------------------------------------------------------
// perfect power normalisation

/// n = root^power with root not a perfect power (root = n, power = 1 when n is not one).
inline std::pair<BigInt, BigInt> perfect_power_root(const BigInt& n)
{
  BigInt root = n;
  BigInt power = 1;
  if (root < 4)
    return {root, power};
  while (mpz_perfect_power_p(root.get_mpz_t()) != 0 && root > 3) {
    std::size_t bl = bit_length(root);
    bool reduced = false;
    BigInt r;
    for (unsigned long e = 2; e <= bl && !reduced; ++e) {
      if (mpz_root(r.get_mpz_t(), root.get_mpz_t(), e) != 0) {
        root = r;
        power *= e;
        reduced = true;
      }
    }
    if (!reduced)
      break;
  }
  return {root, power};
}

// ---------------------------------------------------------------------------
// comparison

struct CompareConfig {
  /// Cross-powers whose size bound stays below this many bits are compared directly.
  std::size_t exact_first_bits = std::size_t(1) << 15;
  unsigned initial_precision = 64;
  unsigned max_precision = 1u << 16;
  /// Last-resort exact cross-powering is attempted only below this many decimal digits.
  double digit_budget = 1e8;
};

struct Witness {
  enum class Kind { Structural, Exact, Interval };
  Kind kind = Kind::Structural;
  std::string note;
  // Exact: the two integers compared after cross-powering.
  BigInt lhs;
  BigInt rhs;
  // Interval: enclosures of exp * ln(base), scaled by 2^precision.
  DyadicInterval lhs_log;
  DyadicInterval rhs_log;
};

struct Comparison {
  Ordering ordering = Ordering::Equal;
  Witness witness;
};

namespace detail {

/// Upper bound on the bit size of a.base^(a.num * b.den); nullopt-like max when huge.
inline double cross_bits(const RootPower& a, const RootPower& b)
{
  double e = a.exp().num().get_d() * b.exp().den().get_d();
  return static_cast<double>(bit_length(a.base())) * e;
}

inline bool cross_exponents_fit(const RootPower& a, const RootPower& b)
{
  return fits_ulong(BigInt(a.exp().num() * b.exp().den())) &&
         fits_ulong(BigInt(b.exp().num() * a.exp().den()));
}

inline Comparison exact_cross(const RootPower& a, const RootPower& b)
{
  Comparison c;
  c.witness.kind = Witness::Kind::Exact;
  c.witness.lhs = big_pow(a.base(), BigInt(a.exp().num() * b.exp().den()).get_ui());
  c.witness.rhs = big_pow(b.base(), BigInt(b.exp().num() * a.exp().den()).get_ui());
  c.ordering = three_way(c.witness.lhs, c.witness.rhs);
  return c;
}

inline Comparison structural(Ordering o, std::string note)
{
  Comparison c;
  c.ordering = o;
  c.witness.kind = Witness::Kind::Structural;
  c.witness.note = std::move(note);
  return c;
}

} // namespace detail

/// Certified comparison with the evidence used to decide it.
inline Comparison compare(const RootPower& a, const RootPower& b, const CompareConfig& cfg = {})
{
  // value 1 is exactly base 1; every other RootPower exceeds 1
  if (a.base() == 1 || b.base() == 1) {
    Ordering o = three_way(a.base() == 1 ? 0 : 1, b.base() == 1 ? 0 : 1);
    return detail::structural(o, "value 1 has base 1; any base > 1 gives a value > 1");
  }
  if (a.base() == b.base())
    return detail::structural(cmp(a.exp(), b.exp()), "equal bases; ordered by exponent");
  if (a.exp() == b.exp())
    return detail::structural(three_way(a.base(), b.base()), "equal exponents; ordered by base");

  bool fits = detail::cross_exponents_fit(a, b);
  double ab = detail::cross_bits(a, b);
  double ba = detail::cross_bits(b, a);
  if (fits && std::max(ab, ba) <= static_cast<double>(cfg.exact_first_bits))
    return detail::exact_cross(a, b);

  bool normalised = false;
  for (unsigned p = cfg.initial_precision; p <= cfg.max_precision; p *= 2) {
    DyadicInterval la = log_bounds(a, p);
    DyadicInterval lb = log_bounds(b, p);
    if (la.hi < lb.lo || la.lo > lb.hi) {
      Comparison c;
      c.ordering = la.hi < lb.lo ? Ordering::Less : Ordering::Greater;
      c.witness.kind = Witness::Kind::Interval;
      c.witness.lhs_log = std::move(la);
      c.witness.rhs_log = std::move(lb);
      return c;
    }
    if (!normalised) {
      // Equal values need equal reduced forms; with both roots non-perfect-powers,
      // r1^e1 = r2^e2 forces r1 = r2.
      normalised = true;
      auto [ra, ka] = perfect_power_root(a.base());
      auto [rb, kb] = perfect_power_root(b.base());
      if (ra == rb) {
        PosRational ea = a.exp() * PosRational::integer(ka);
        PosRational eb = b.exp() * PosRational::integer(kb);
        return detail::structural(cmp(ea, eb), "common perfect-power root " + ra.get_str() +
                                                   "; ordered by reduced exponent");
      }
    }
  }

  double digits = std::min(ab, ba) * 0.30103;
  if (fits && digits <= cfg.digit_budget)
    return detail::exact_cross(a, b);
  fail(ErrorKind::ResourceExceeded,
       "cannot separate " + a.to_string() + " and " + b.to_string() + " within the configured budget");
}

inline Ordering cmp_root_powers(const RootPower& a, const RootPower& b, const CompareConfig& cfg = {})
{
  return compare(a, b, cfg).ordering;
}

inline const RootPower& max_of(const RootPower& a, const RootPower& b)
{
  return cmp_root_powers(a, b) == Ordering::Less ? b : a;
}

inline const RootPower& min_of(const RootPower& a, const RootPower& b)
{
  return cmp_root_powers(a, b) == Ordering::Greater ? b : a;
}

} // namespace jordan

#endif // JORDAN_EXACT_ARITH_HPP
