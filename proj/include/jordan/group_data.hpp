#ifndef JORDAN_GROUP_DATA_HPP
#define JORDAN_GROUP_DATA_HPP

//! @file
//! Finite simple group identifiers, their orders and outer automorphism group
//! orders, matrix group orders, and the classification tables.

#include "jordan/csv.hpp"
#include "jordan/errors.hpp"
#include "jordan/exact_arith.hpp"
#include "jordan/expr.hpp"
#include "jordan/embedded_data.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace jordan {

// ---------------------------------------------------------------------------
// small number theory

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

struct PrimePower {
  std::uint64_t p = 0;
  unsigned f = 0;
};

/// q = p^f with p prime, or nullopt.
inline std::optional<PrimePower> prime_power(std::uint64_t q)
{
  if (q < 2)
    return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1)
    return std::nullopt;
  return PrimePower{p, f};
}

inline PrimePower require_prime_power(std::uint64_t q)
{
  auto pp = prime_power(q);
  if (!pp)
    fail(ErrorKind::InvalidParams, std::to_string(q) + " is not a prime power");
  return *pp;
}

// ---------------------------------------------------------------------------
// GroupSpec

enum class Family {
  Alternating,
  Sporadic,
  PSL,
  PSU,
  PSp,
  POmegaOdd,
  POmegaPlus,
  POmegaMinus,
  Suzuki,
  Ree2G2,
  Ree2F4,
  Steinberg3D4,
  Twisted2E6,
  G2,
  F4,
  E6,
  E7,
  E8,
};

inline constexpr Family all_families[] = {
    Family::Alternating, Family::Sporadic,     Family::PSL,        Family::PSU,        Family::PSp,
    Family::POmegaOdd,   Family::POmegaPlus,   Family::POmegaMinus, Family::Suzuki,    Family::Ree2G2,
    Family::Ree2F4,      Family::Steinberg3D4, Family::Twisted2E6, Family::G2,         Family::F4,
    Family::E6,          Family::E7,           Family::E8,
};

/// Short family key; for the exceptional families this is also the data-table key.
inline std::string family_key(Family f)
{
  switch (f) {
  case Family::Alternating: return "Alt";
  case Family::Sporadic: return "Sporadic";
  case Family::PSL: return "PSL";
  case Family::PSU: return "PSU";
  case Family::PSp: return "PSp";
  case Family::POmegaOdd: return "POmega";
  case Family::POmegaPlus: return "POmega+";
  case Family::POmegaMinus: return "POmega-";
  case Family::Suzuki: return "Sz";
  case Family::Ree2G2: return "2G2";
  case Family::Ree2F4: return "2F4";
  case Family::Steinberg3D4: return "3D4";
  case Family::Twisted2E6: return "2E6";
  case Family::G2: return "G2";
  case Family::F4: return "F4";
  case Family::E6: return "E6";
  case Family::E7: return "E7";
  case Family::E8: return "E8";
  }
  return "?";
}

inline bool is_exceptional(Family f) { return f >= Family::Suzuki; }

inline bool is_lie_type(Family f) { return f != Family::Alternating && f != Family::Sporadic; }

/// Identifier of a finite simple group. Non-simple parameters are rejected on construction.
class GroupSpec {
public:
  static GroupSpec alternating(unsigned long m)
  {
    if (m < 5)
      fail(ErrorKind::InvalidParams, "Alt(m) is simple only for m >= 5");
    return GroupSpec(Family::Alternating, m, 0, {});
  }

  /// Names are checked against the table on lookup, not here.
  static GroupSpec sporadic(std::string name) { return GroupSpec(Family::Sporadic, 0, 0, std::move(name)); }

  static GroupSpec psl(unsigned long n, std::uint64_t q)
  {
    require_prime_power(q);
    if (n < 2)
      fail(ErrorKind::InvalidParams, "PSL(n,q) needs n >= 2");
    if (n == 2 && q < 4)
      fail(ErrorKind::InvalidParams, "PSL(2," + std::to_string(q) + ") is not simple");
    return GroupSpec(Family::PSL, n, q, {});
  }

  static GroupSpec psu(unsigned long n, std::uint64_t q)
  {
    require_prime_power(q);
    if (n < 3)
      fail(ErrorKind::InvalidParams, "PSU(n,q) needs n >= 3");
    if (n == 3 && q == 2)
      fail(ErrorKind::InvalidParams, "PSU(3,2) is not simple");
    return GroupSpec(Family::PSU, n, q, {});
  }

  /// PSp(dim, q) with dim = 2n even.
  static GroupSpec psp(unsigned long dim, std::uint64_t q)
  {
    require_prime_power(q);
    if (dim < 4 || dim % 2 != 0)
      fail(ErrorKind::InvalidParams, "PSp(2n,q) needs even dimension >= 4");
    if (dim == 4 && q == 2)
      fail(ErrorKind::InvalidParams, "PSp(4,2) is not simple");
    return GroupSpec(Family::PSp, dim, q, {});
  }

  /// POmega(dim, q) with dim = 2n+1 >= 7 and q odd.
  static GroupSpec omega_odd(unsigned long dim, std::uint64_t q)
  {
    require_prime_power(q);
    if (dim < 7 || dim % 2 == 0)
      fail(ErrorKind::InvalidParams, "POmega(2n+1,q) needs odd dimension >= 7");
    if (q % 2 == 0)
      fail(ErrorKind::InvalidParams, "POmega(2n+1,q) needs q odd");
    return GroupSpec(Family::POmegaOdd, dim, q, {});
  }

  static GroupSpec omega_plus(unsigned long dim, std::uint64_t q)
  {
    require_prime_power(q);
    if (dim < 8 || dim % 2 != 0)
      fail(ErrorKind::InvalidParams, "POmega+(2n,q) needs even dimension >= 8");
    return GroupSpec(Family::POmegaPlus, dim, q, {});
  }

  static GroupSpec omega_minus(unsigned long dim, std::uint64_t q)
  {
    require_prime_power(q);
    if (dim < 8 || dim % 2 != 0)
      fail(ErrorKind::InvalidParams, "POmega-(2n,q) needs even dimension >= 8");
    return GroupSpec(Family::POmegaMinus, dim, q, {});
  }

  /// Exceptional and twisted families, parameterised by q alone.
  static GroupSpec exceptional(Family fam, std::uint64_t q)
  {
    if (!is_exceptional(fam))
      fail(ErrorKind::InvalidParams, "not an exceptional family");
    PrimePower pp = require_prime_power(q);
    auto odd_power_of = [&](std::uint64_t p) {
      if (pp.p != p || pp.f % 2 == 0 || pp.f < 3)
        fail(ErrorKind::InvalidParams, family_key(fam) + "(q) needs q = " + std::to_string(p) +
                                           "^(2m+1) with m >= 1");
    };
    if (fam == Family::Suzuki || fam == Family::Ree2F4)
      odd_power_of(2);
    if (fam == Family::Ree2G2)
      odd_power_of(3);
    if (fam == Family::G2 && q == 2)
      fail(ErrorKind::InvalidParams, "G2(2) is not simple");
    return GroupSpec(fam, 0, q, {});
  }

  /// Generic constructor used by the CLI and enumerators; n is ignored where not applicable.
  static GroupSpec make(Family fam, unsigned long n, std::uint64_t q)
  {
    switch (fam) {
    case Family::Alternating: return alternating(n);
    case Family::Sporadic: fail(ErrorKind::InvalidParams, "use GroupSpec::sporadic(name)");
    case Family::PSL: return psl(n, q);
    case Family::PSU: return psu(n, q);
    case Family::PSp: return psp(n, q);
    case Family::POmegaOdd: return omega_odd(n, q);
    case Family::POmegaPlus: return omega_plus(n, q);
    case Family::POmegaMinus: return omega_minus(n, q);
    default: return exceptional(fam, q);
    }
  }

  Family family() const { return family_; }
  /// Degree m for Alt(m), matrix dimension for classical families, 0 otherwise.
  unsigned long n() const { return n_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return prime_power(q_)->p; }
  unsigned f() const { return prime_power(q_)->f; }
  /// Lie rank parameter: dim/2 for PSp and orthogonal families.
  unsigned long rank() const { return n_ / 2; }
  const std::string& name() const { return name_; }

  std::string to_string() const
  {
    switch (family_) {
    case Family::Alternating: return "Alt(" + std::to_string(n_) + ")";
    case Family::Sporadic: return name_;
    case Family::PSL:
    case Family::PSU:
    case Family::PSp:
    case Family::POmegaOdd:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return family_key(family_) + "(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
    default: return family_key(family_) + "(" + std::to_string(q_) + ")";
    }
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec& a, const GroupSpec& b)
  {
    return std::tie(a.family_, a.n_, a.q_, a.name_) <=> std::tie(b.family_, b.n_, b.q_, b.name_);
  }

private:
  GroupSpec(Family fam, unsigned long n, std::uint64_t q, std::string name)
      : family_(fam), n_(n), q_(q), name_(std::move(name))
  {
  }

  Family family_;
  unsigned long n_;
  std::uint64_t q_;
  std::string name_;
};

/// Known isomorphisms between specs that are not canonicalised, for tests and reports.
inline std::vector<std::pair<GroupSpec, GroupSpec>> known_isomorphisms()
{
  return {
      {GroupSpec::psl(2, 4), GroupSpec::alternating(5)}, {GroupSpec::psl(2, 5), GroupSpec::alternating(5)},
      {GroupSpec::psl(2, 9), GroupSpec::alternating(6)}, {GroupSpec::psl(4, 2), GroupSpec::alternating(8)},
      {GroupSpec::psl(2, 7), GroupSpec::psl(3, 2)},      {GroupSpec::psp(4, 3), GroupSpec::psu(4, 2)},
  };
}

// ---------------------------------------------------------------------------
// data tables

struct SporadicRecord {
  std::string name;
  BigInt order;
  unsigned out_order = 1;
  unsigned long min_proj_degree = 0;
  std::string source;
};

struct ExceptionalRow {
  std::string family;
  std::string condition;
  std::string order;
  std::string out;
  std::string degree;
  bool degree_exact = false;
  std::string source;
};

struct InertiaOverride {
  std::string group;
  unsigned long degree = 0;
  unsigned long verified_index = 1;
  std::string citation;
};

inline constexpr const char* sporadic_file = "sporadic.csv";
inline constexpr const char* exceptional_file = "exceptional_families.csv";
inline constexpr const char* inertia_file = "inertia_overrides.csv";

/// Immutable classification tables with per-file content hashes.
class DataTables {
public:
  /// Tables compiled into the binary.
  static const DataTables& embedded()
  {
    static const DataTables tables = [] {
      std::map<std::string, std::string> texts;
      for (const auto& file : embedded::files)
        texts[std::string(file.name)] = std::string(file.text);
      return from_texts(texts);
    }();
    return tables;
  }

  /// Reads the three table files from a directory.
  static DataTables load(const std::filesystem::path& dir)
  {
    std::map<std::string, std::string> texts;
    for (const char* name : {sporadic_file, exceptional_file, inertia_file}) {
      std::ifstream in(dir / name, std::ios::binary);
      if (!in)
        fail(ErrorKind::MissingData, "cannot read " + (dir / name).string());
      std::ostringstream buf;
      buf << in.rdbuf();
      texts[name] = buf.str();
    }
    return from_texts(texts);
  }

  static DataTables from_texts(const std::map<std::string, std::string>& texts)
  {
    DataTables t;
    auto text_of = [&](const char* name) -> const std::string& {
      auto it = texts.find(name);
      if (it == texts.end())
        fail(ErrorKind::MissingData, std::string("no data for ") + name);
      t.hashes_[name] = fnv1a_hex(it->second);
      return it->second;
    };
    auto rows_of = [&](const char* name, std::size_t columns) {
      auto rows = parse_csv(text_of(name), name);
      if (rows.empty())
        fail(ErrorKind::DataFormat, std::string(name) + ": missing header");
      for (const auto& r : rows)
        if (r.size() != columns)
          fail(ErrorKind::DataFormat, std::string(name) + ": expected " + std::to_string(columns) + " columns");
      rows.erase(rows.begin());
      return rows;
    };
    auto to_ulong = [](const std::string& s, const char* what) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size())
          throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        fail(ErrorKind::DataFormat, std::string("bad integer in ") + what + ": '" + s + "'");
      }
    };

    for (const auto& r : rows_of(sporadic_file, 5)) {
      SporadicRecord rec;
      rec.name = r[0];
      if (rec.order.set_str(r[1], 10) != 0)
        fail(ErrorKind::DataFormat, "sporadic.csv: bad order for " + r[0]);
      rec.out_order = static_cast<unsigned>(to_ulong(r[2], sporadic_file));
      rec.min_proj_degree = to_ulong(r[3], sporadic_file);
      rec.source = r[4];
      if (rec.order <= 1 || rec.out_order < 1 || rec.out_order > 2 || rec.min_proj_degree < 2)
        fail(ErrorKind::DataFormat, "sporadic.csv: row " + r[0] + " violates table invariants");
      t.sporadic_.push_back(std::move(rec));
    }
    for (const auto& r : rows_of(exceptional_file, 7))
      t.exceptional_.push_back({r[0], r[1], r[2], r[3], r[4], to_ulong(r[5], exceptional_file) != 0, r[6]});
    for (const auto& r : rows_of(inertia_file, 4))
      t.inertia_.push_back({r[0], to_ulong(r[1], inertia_file), to_ulong(r[2], inertia_file), r[3]});
    return t;
  }

  const std::vector<SporadicRecord>& sporadic() const { return sporadic_; }
  const std::vector<ExceptionalRow>& exceptional() const { return exceptional_; }
  const std::vector<InertiaOverride>& inertia() const { return inertia_; }
  /// file name -> FNV-1a digest of its bytes
  const std::map<std::string, std::string>& hashes() const { return hashes_; }

  const SporadicRecord& sporadic_record(const std::string& name) const
  {
    for (const auto& r : sporadic_)
      if (r.name == name)
        return r;
    fail(ErrorKind::UnknownSporadic, "no sporadic group named '" + name + "'");
  }

private:
  std::vector<SporadicRecord> sporadic_;
  std::vector<ExceptionalRow> exceptional_;
  std::vector<InertiaOverride> inertia_;
  std::map<std::string, std::string> hashes_;
};

inline const SporadicRecord& sporadic_record(const std::string& name,
                                             const DataTables& data = DataTables::embedded())
{
  return data.sporadic_record(name);
}

namespace detail {

inline ExprVars spec_vars(const GroupSpec& s)
{
  PrimePower pp = *prime_power(s.q());
  ExprVars v{{'q', BigInt(static_cast<unsigned long>(s.q()))},
             {'p', BigInt(static_cast<unsigned long>(pp.p))},
             {'f', BigInt(pp.f)}};
  if (pp.f % 2 == 1)
    v['m'] = BigInt((pp.f - 1) / 2);
  return v;
}

inline bool condition_matches(const std::string& cond, const GroupSpec& s)
{
  if (cond == "*")
    return true;
  auto num = [&](std::size_t from) { return std::stoull(cond.substr(from)); };
  if (cond.rfind("q=", 0) == 0)
    return s.q() == num(2);
  if (cond.rfind("p=", 0) == 0)
    return s.p() == num(2);
  if (cond.rfind("p!=", 0) == 0)
    return s.p() != num(3);
  fail(ErrorKind::DataFormat, "unknown row condition '" + cond + "'");
}

} // namespace detail

/// First exceptional-table row for the group's family whose condition holds.
inline const ExceptionalRow& exceptional_row(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  std::string key = family_key(s.family());
  for (const auto& r : data.exceptional())
    if (r.family == key && detail::condition_matches(r.condition, s))
      return r;
  fail(ErrorKind::MissingData, "no exceptional-family row for " + s.to_string());
}

inline BigInt eval_row_formula(const std::string& formula, const GroupSpec& s)
{
  return eval_formula(formula, detail::spec_vars(s));
}

// ---------------------------------------------------------------------------
// matrix groups

enum class MatrixKind { GL, SL, Sp, SU, U };

inline std::string to_string(MatrixKind k)
{
  switch (k) {
  case MatrixKind::GL: return "GL";
  case MatrixKind::SL: return "SL";
  case MatrixKind::Sp: return "Sp";
  case MatrixKind::SU: return "SU";
  case MatrixKind::U: return "U";
  }
  return "?";
}

/// |GL|, |SL|, |Sp|, |SU| or |U| of the given dimension over the field with q elements.
inline BigInt order_matrix_group(MatrixKind kind, unsigned long dim, std::uint64_t q)
{
  if (dim < 1)
    fail(ErrorKind::InvalidParams, "dimension must be positive");
  require_prime_power(q);
  BigInt Q(static_cast<unsigned long>(q));
  BigInt r = 1;
  switch (kind) {
  case MatrixKind::GL:
  case MatrixKind::SL: {
    BigInt qm = big_pow(Q, dim);
    for (unsigned long i = 0; i < dim; ++i)
      r *= qm - big_pow(Q, i);
    if (kind == MatrixKind::SL)
      r /= Q - 1;
    return r;
  }
  case MatrixKind::Sp: {
    if (dim % 2 != 0)
      fail(ErrorKind::InvalidParams, "Sp needs even dimension");
    unsigned long m = dim / 2;
    r = big_pow(Q, m * m);
    for (unsigned long i = 1; i <= m; ++i)
      r *= big_pow(Q, 2 * i) - 1;
    return r;
  }
  case MatrixKind::U:
  case MatrixKind::SU: {
    r = big_pow(Q, dim * (dim - 1) / 2);
    for (unsigned long i = 1; i <= dim; ++i)
      r *= i % 2 == 0 ? BigInt(big_pow(Q, i) - 1) : BigInt(big_pow(Q, i) + 1);
    if (kind == MatrixKind::SU)
      r /= Q + 1;
    return r;
  }
  }
  return r;
}

/// Counts invertible (GL) or form-preserving (Sp) matrices by enumeration, q prime.
inline BigInt brute_force_matrix_order(MatrixKind kind, unsigned dim, unsigned q)
{
  if (kind != MatrixKind::GL && kind != MatrixKind::Sp)
    fail(ErrorKind::InvalidParams, "brute force supports GL and Sp only");
  if (dim < 1 || !is_prime(q))
    fail(ErrorKind::InvalidParams, "brute force needs dim >= 1 and q prime");
  if (kind == MatrixKind::Sp && dim % 2 != 0)
    fail(ErrorKind::InvalidParams, "Sp needs even dimension");
  const unsigned cells = dim * dim;
  double log2_total = cells * std::log2(static_cast<double>(q));
  if (log2_total > 24.0)
    fail(ErrorKind::CapExceeded, "q^(dim^2) exceeds 2^24");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < cells; ++i)
    total *= q;

  auto md = [q](long v) { return static_cast<int>(((v % static_cast<long>(q)) + q) % q); };
  std::vector<int> inv(q, 0);
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (a * b % q == 1)
        inv[a] = static_cast<int>(b);

  // standard alternating form J = [[0, I], [-I, 0]]
  const unsigned h = dim / 2;
  auto form = [h](unsigned i, unsigned j) -> int {
    if (i < h && j == i + h)
      return 1;
    if (i >= h && j + h == i)
      return -1;
    return 0;
  };

  std::vector<int> m(cells), a(cells);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < cells; ++i) {
      m[i] = static_cast<int>(c % q);
      c /= q;
    }
    a = m;
    bool singular = false;
    for (unsigned col = 0; col < dim && !singular; ++col) {
      unsigned piv = col;
      while (piv < dim && a[piv * dim + col] == 0)
        ++piv;
      if (piv == dim) {
        singular = true;
        break;
      }
      if (piv != col)
        for (unsigned k = 0; k < dim; ++k)
          std::swap(a[piv * dim + k], a[col * dim + k]);
      int iv = inv[a[col * dim + col]];
      for (unsigned r = col + 1; r < dim; ++r) {
        int factor = md(static_cast<long>(a[r * dim + col]) * iv);
        if (factor == 0)
          continue;
        for (unsigned k = col; k < dim; ++k)
          a[r * dim + k] = md(a[r * dim + k] - static_cast<long>(factor) * a[col * dim + k]);
      }
    }
    if (singular)
      continue;
    if (kind == MatrixKind::Sp) {
      // M^T J M = J
      bool preserves = true;
      for (unsigned i = 0; i < dim && preserves; ++i)
        for (unsigned j = 0; j < dim && preserves; ++j) {
          long s = 0;
          for (unsigned k = 0; k < dim; ++k)
            for (unsigned l = 0; l < dim; ++l)
              if (int fkl = form(k, l))
                s += static_cast<long>(m[k * dim + i]) * fkl * m[l * dim + j];
          preserves = md(s) == md(form(i, j));
        }
      if (!preserves)
        continue;
    }
    ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

// ---------------------------------------------------------------------------
// simple group orders

inline BigInt order_simple(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  if (s.family() == Family::Alternating)
    return factorial(s.n()) / 2;
  if (s.family() == Family::Sporadic)
    return data.sporadic_record(s.name()).order;
  if (is_exceptional(s.family()))
    return eval_row_formula(exceptional_row(s, data).order, s);

  BigInt Q(static_cast<unsigned long>(s.q()));
  const unsigned long n = s.n();
  BigInt r;
  switch (s.family()) {
  case Family::PSL:
    return order_matrix_group(MatrixKind::SL, n, s.q()) / big_gcd(BigInt(n), Q - 1);
  case Family::PSU:
    return order_matrix_group(MatrixKind::SU, n, s.q()) / big_gcd(BigInt(n), Q + 1);
  case Family::PSp:
  case Family::POmegaOdd:
    return order_matrix_group(MatrixKind::Sp, 2 * s.rank(), s.q()) / big_gcd(BigInt(2), Q - 1);
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    unsigned long k = s.rank();
    BigInt qk = big_pow(Q, k);
    BigInt eps = s.family() == Family::POmegaPlus ? BigInt(qk - 1) : BigInt(qk + 1);
    r = big_pow(Q, k * (k - 1)) * eps;
    for (unsigned long i = 1; i < k; ++i)
      r *= big_pow(Q, 2 * i) - 1;
    return r / big_gcd(BigInt(4), eps);
  }
  default: break;
  }
  fail(ErrorKind::InvalidParams, "unhandled family");
}

inline BigInt out_order(const GroupSpec& s, const DataTables& data = DataTables::embedded())
{
  if (s.family() == Family::Alternating)
    return s.n() == 6 ? 4 : 2;
  if (s.family() == Family::Sporadic)
    return data.sporadic_record(s.name()).out_order;
  if (is_exceptional(s.family()))
    return eval_row_formula(exceptional_row(s, data).out, s);

  BigInt Q(static_cast<unsigned long>(s.q()));
  BigInt f(s.f());
  const unsigned long n = s.n();
  switch (s.family()) {
  case Family::PSL:
    if (n == 2)
      return big_gcd(BigInt(2), Q - 1) * f;
    return 2 * big_gcd(BigInt(n), Q - 1) * f;
  case Family::PSU: return 2 * f * big_gcd(BigInt(n), Q + 1);
  case Family::PSp:
    if (s.rank() == 2)
      return 2 * f; // graph automorphism in characteristic 2, diagonal otherwise
    return big_gcd(BigInt(2), Q - 1) * f;
  case Family::POmegaOdd: return 2 * f;
  case Family::POmegaPlus: {
    BigInt d = big_gcd(BigInt(4), BigInt(big_pow(Q, s.rank()) - 1));
    return d * f * (s.rank() == 4 ? 6 : 2);
  }
  case Family::POmegaMinus: return big_gcd(BigInt(4), BigInt(big_pow(Q, s.rank()) + 1)) * 2 * f;
  default: break;
  }
  fail(ErrorKind::InvalidParams, "unhandled family");
}

} // namespace jordan

#endif // JORDAN_GROUP_DATA_HPP
