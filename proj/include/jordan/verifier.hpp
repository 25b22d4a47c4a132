#ifndef JORDAN_VERIFIER_HPP
#define JORDAN_VERIFIER_HPP

//! @file
//! Runs the claim registry concurrently and renders a deterministic report.

#include "jordan/claim_registry.hpp"
#include "jordan/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace jordan {

struct Summary {
  /// actual Pass for an expected Pass or KnownDiscrepancy claim
  std::size_t pass = 0;
  /// KnownDiscrepancy claims that fail, as expected
  std::size_t fail_expected = 0;
  /// expected Pass claims that fail
  std::size_t fail_unexpected = 0;
  std::size_t unresolved = 0;
  std::size_t skipped = 0;

  bool operator==(const Summary&) const = default;
};

struct Report {
  GridConfig grid;
  std::map<std::string, std::string> data_hashes;
  std::vector<ClaimCheck> claims;
  Summary summary;
};

inline Summary summarize(const std::vector<ClaimCheck>& claims)
{
  Summary s;
  for (const ClaimCheck& c : claims) {
    if (c.expected == Expected::Unresolved)
      ++s.unresolved;
    else if (c.actual == Actual::SkippedResource)
      ++s.skipped;
    else if (c.actual == Actual::Pass)
      ++s.pass;
    else if (c.expected == Expected::KnownDiscrepancy)
      ++s.fail_expected;
    else
      ++s.fail_unexpected;
  }
  return s;
}

/// 0 clean, 2 when an expected-Pass claim fails, 3 when a claim was skipped for resources.
inline int exit_status(const Report& r)
{
  if (r.summary.fail_unexpected > 0)
    return 2;
  if (r.summary.skipped > 0)
    return 3;
  return 0;
}

namespace detail {

inline bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

inline bool task_selected(const ClaimTask& t, const std::vector<std::string>& selection)
{
  if (selection.empty())
    return true;
  for (const std::string& sel : selection)
    for (const std::string& p : t.prefixes)
      if (starts_with(p, sel) || starts_with(sel, p))
        return true;
  return false;
}

inline bool claim_selected(const ClaimCheck& c, const std::vector<std::string>& selection)
{
  if (selection.empty())
    return true;
  return std::any_of(selection.begin(), selection.end(),
                     [&](const std::string& sel) { return starts_with(c.id, sel); });
}

} // namespace detail

/// Evaluates the registered claims whose ids start with one of the selection prefixes
/// (all when empty) on up to `workers` threads. The result does not depend on the
/// worker count or scheduling.
inline Report run_claims(const GridConfig& grid, const std::vector<std::string>& selection = {},
                         unsigned workers = 1, const DataTables& data = DataTables::embedded(),
                         const std::vector<ClaimTask>& tasks = claim_registry())
{
  grid.validate();
  std::vector<const ClaimTask*> todo;
  for (const ClaimTask& t : tasks)
    if (detail::task_selected(t, selection))
      todo.push_back(&t);

  std::vector<std::vector<ClaimCheck>> results(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      try {
        results[i] = todo[i]->run(grid, data);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i)
    pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool)
    t.join();
  for (const std::exception_ptr& e : errors)
    if (e)
      std::rethrow_exception(e);

  Report r;
  r.grid = grid;
  r.data_hashes = data.hashes();
  for (auto& batch : results)
    for (ClaimCheck& c : batch)
      if (detail::claim_selected(c, selection))
        r.claims.push_back(std::move(c));
  std::stable_sort(r.claims.begin(), r.claims.end(),
                   [](const ClaimCheck& a, const ClaimCheck& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < r.claims.size(); ++i)
    if (r.claims[i].id == r.claims[i - 1].id)
      fail(ErrorKind::Inconsistent, "duplicate claim id " + r.claims[i].id);
  r.summary = summarize(r.claims);
  return r;
}

// ---------------------------------------------------------------------------
// rendering

enum class ReportFormat { Text, Json };

using json = nlohmann::ordered_json;

namespace detail {

inline constexpr std::size_t digest_threshold = 1000;

/// Decimal string, or a digest (digit count, ends, FNV-1a hash) when longer than 1000 digits.
inline json integer_json(const BigInt& n)
{
  std::string s = n.get_str();
  if (s.size() <= digest_threshold)
    return s;
  json d;
  d["digits"] = s.size();
  d["leading"] = s.substr(0, 20);
  d["trailing"] = s.substr(s.size() - 20);
  d["fnv1a"] = fnv1a_hex(s);
  return d;
}

/// JSON integer when it fits, decimal string otherwise.
inline json exponent_json(const BigInt& n)
{
  if (fits_ulong(n))
    return n.get_ui();
  return n.get_str();
}

inline std::string kind_name(Witness::Kind k)
{
  switch (k) {
  case Witness::Kind::Structural: return "structural";
  case Witness::Kind::Exact: return "exact";
  case Witness::Kind::Interval: return "interval";
  }
  return "?";
}

inline std::string short_integer(const BigInt& n)
{
  std::string s = n.get_str();
  if (s.size() <= 24)
    return s;
  return "[" + std::to_string(s.size()) + " digits]";
}

} // namespace detail

inline json to_json(const RootPower& x)
{
  json j;
  j["base"] = x.base().get_str();
  j["num"] = detail::exponent_json(x.exp().num());
  j["den"] = detail::exponent_json(x.exp().den());
  if (!x.label().empty())
    j["label"] = x.label();
  return j;
}

inline json to_json(const Witness& w)
{
  json j;
  j["kind"] = detail::kind_name(w.kind);
  switch (w.kind) {
  case Witness::Kind::Structural: j["note"] = w.note; break;
  case Witness::Kind::Exact:
    j["lhs"] = detail::integer_json(w.lhs);
    j["rhs"] = detail::integer_json(w.rhs);
    break;
  case Witness::Kind::Interval:
    j["precision"] = w.lhs_log.precision;
    j["lhs_log"] = {{"lo", detail::integer_json(w.lhs_log.lo)}, {"hi", detail::integer_json(w.lhs_log.hi)}};
    j["rhs_log"] = {{"lo", detail::integer_json(w.rhs_log.lo)}, {"hi", detail::integer_json(w.rhs_log.hi)}};
    break;
  }
  return j;
}

inline json to_json(const GridConfig& g)
{
  return {{"max_qm", g.max_qm},
          {"max_prime", g.max_prime},
          {"max_alt", g.max_alt},
          {"max_sweep", g.max_sweep},
          {"max_exceptional_q", g.max_exceptional_q}};
}

inline json to_json(const Summary& s)
{
  return {{"pass", s.pass},
          {"fail_expected", s.fail_expected},
          {"fail_unexpected", s.fail_unexpected},
          {"unresolved", s.unresolved},
          {"skipped", s.skipped}};
}

inline json to_json(const ClaimCheck& c)
{
  json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["relation"] = to_string(c.relation);
  j["expected"] = to_string(c.expected);
  j["actual"] = to_string(c.actual);
  j["witness"] = to_json(c.witness);
  j["comment"] = c.comment;
  j["instances"] = c.instances;
  return j;
}

inline json to_json(const Report& r)
{
  json j;
  j["grid"] = to_json(r.grid);
  j["data_hashes"] = json::object();
  for (const auto& [file, hash] : r.data_hashes)
    j["data_hashes"][file] = hash;
  j["claims"] = json::array();
  for (const ClaimCheck& c : r.claims)
    j["claims"].push_back(to_json(c));
  j["summary"] = to_json(r.summary);
  return j;
}

inline std::string summary_line(const Summary& s)
{
  std::ostringstream os;
  os << s.pass << " pass, " << s.fail_expected << " known-discrepancy, " << s.fail_unexpected << " unexpected-fail, "
     << s.unresolved << " unresolved, " << s.skipped << " skipped";
  return os.str();
}

/// Short human form of the witness for text tables.
inline std::string witness_digest(const Witness& w)
{
  switch (w.kind) {
  case Witness::Kind::Structural: return "structural: " + w.note;
  case Witness::Kind::Exact:
    return "exact: " + detail::short_integer(w.lhs) + " vs " + detail::short_integer(w.rhs);
  case Witness::Kind::Interval: return "interval at " + std::to_string(w.lhs_log.precision) + " bits";
  }
  return "?";
}

inline std::string status_label(const ClaimCheck& c)
{
  if (c.expected == Expected::Unresolved)
    return "UNRESOLVED";
  switch (c.actual) {
  case Actual::Pass: return "PASS";
  case Actual::SkippedResource: return "SKIPPED";
  case Actual::Fail: return c.expected == Expected::KnownDiscrepancy ? "KNOWN-FAIL" : "FAIL";
  }
  return "?";
}

inline std::string render_report(const Report& r, ReportFormat fmt)
{
  if (fmt == ReportFormat::Json)
    return to_json(r).dump(2) + "\n";

  std::size_t id_w = 2;
  for (const ClaimCheck& c : r.claims)
    id_w = std::max(id_w, c.id.size());
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w)
      s.append(w - s.size(), ' ');
    return s;
  };
  std::ostringstream os;
  os << "grid: max_qm " << r.grid.max_qm << ", max_prime " << r.grid.max_prime << ", max_alt " << r.grid.max_alt
     << ", max_sweep " << r.grid.max_sweep << ", max_exceptional_q " << r.grid.max_exceptional_q << "\n";
  for (const auto& [file, hash] : r.data_hashes)
    os << "data: " << file << " " << hash << "\n";
  os << pad("id", id_w) << "  " << pad("status", 10) << "  " << pad("n", 6) << "  statement  [witness]\n";
  for (const ClaimCheck& c : r.claims) {
    os << pad(c.id, id_w) << "  " << pad(status_label(c), 10) << "  " << pad(std::to_string(c.instances), 6) << "  "
       << c.statement << "  [" << witness_digest(c.witness) << "]\n";
  }
  os << summary_line(r.summary) << "\n";
  return os.str();
}

} // namespace jordan

#endif // JORDAN_VERIFIER_HPP
