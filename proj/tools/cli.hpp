#ifndef JORDAN_TOOLS_CLI_HPP
#define JORDAN_TOOLS_CLI_HPP

//! @file
//! Command-line front end: order | mpr | bound | verify | table.

#include "jordan/jordan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace jordan::cli {

enum ExitCode { ExitOk = 0, ExitUsage = 1, ExitUnexpectedFail = 2, ExitResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& what)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError(what + " is out of range: " + s);
  }
}

inline std::optional<MatrixKind> matrix_kind(const std::string& k)
{
  if (k == "gl")
    return MatrixKind::GL;
  if (k == "sl")
    return MatrixKind::SL;
  if (k == "sp")
    return MatrixKind::Sp;
  if (k == "su")
    return MatrixKind::SU;
  if (k == "u" || k == "gu")
    return MatrixKind::U;
  return std::nullopt;
}

/// alt M | psl N Q | psu N Q | psp DIM Q | omega DIM Q | omega+ DIM Q | omega- DIM Q |
/// sz Q | 2g2 Q | 2f4 Q | 3d4 Q | 2e6 Q | g2 Q | f4 Q | e6 Q | e7 Q | e8 Q | [sporadic] NAME
inline GroupSpec parse_group(const std::vector<std::string>& t, const DataTables& data)
{
  if (t.empty())
    throw UsageError("missing group");
  std::string k = lower(t[0]);
  auto need = [&](std::size_t n) {
    if (t.size() != n + 1)
      throw UsageError("'" + t[0] + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (k == "alt" || k == "a") {
    need(1);
    return GroupSpec::alternating(parse_uint(t[1], "degree"));
  }
  if (k == "sporadic") {
    need(1);
    return GroupSpec::sporadic(data.sporadic_record(t[1]).name);
  }
  for (const SporadicRecord& r : data.sporadic())
    if (lower(r.name) == k) {
      need(0);
      return GroupSpec::sporadic(r.name);
    }
  std::string key = k == "omega" ? "pomega" : k == "omega+" ? "pomega+" : k == "omega-" ? "pomega-" : k;
  for (Family f : all_families) {
    if (!is_lie_type(f) || lower(family_key(f)) != key)
      continue;
    if (is_exceptional(f)) {
      need(1);
      return GroupSpec::exceptional(f, parse_uint(t[1], "q"));
    }
    need(2);
    return GroupSpec::make(f, parse_uint(t[1], "n"), parse_uint(t[2], "q"));
  }
  throw UsageError("unknown group kind '" + t[0] + "'");
}

inline std::string value_text(const RootPower& x)
{
  std::string s = x.to_string();
  if (!(x.exp().den() == 1 && x.label().empty() && x.base_string() == x.base().get_str()))
    s += "  ≈ " + approx_decimal(x) + " (approximate)";
  return s;
}

inline json value_json(const RootPower& x)
{
  json j = to_json(x);
  j["text"] = x.to_string();
  j["approx"] = approx_decimal(x);
  return j;
}

inline json bound_json(const BoundResult& r)
{
  json j;
  j["lower"] = r.lower ? value_json(*r.lower) : json(nullptr);
  j["upper"] = value_json(r.upper);
  j["provenance"] = r.provenance;
  if (r.attainment)
    j["attainment"] = {{"group", r.attainment->group}, {"degree", r.attainment->degree}};
  else
    j["attainment"] = nullptr;
  j["certificates"] = json::array();
  for (const ClaimCheck& c : r.certificates)
    j["certificates"].push_back(to_json(c));
  return j;
}

inline void print_bound(std::ostream& out, const std::string& name, const BoundResult& r)
{
  if (r.lower)
    out << name << " lower: " << value_text(*r.lower) << "\n";
  out << name << " upper: " << value_text(r.upper) << "\n";
  if (r.attainment)
    out << name << " attained: " << r.attainment->to_string() << "\n";
  out << name << " provenance: " << r.provenance << "\n";
  for (const ClaimCheck& c : r.certificates)
    out << name << " certificate: " << c.statement << ": " << to_string(c.actual) << "\n";
}

struct Globals {
  bool json = false;
  std::uint64_t grid = 65536;
  unsigned workers = 1;
  std::string data_dir;
};

inline GridConfig grid_from(const Globals& g)
{
  GridConfig grid;
  grid.max_qm = g.grid;
  grid.max_prime = g.grid;
  grid.validate();
  return grid;
}

// ---------------------------------------------------------------------------

inline int cmd_order(const Globals& g, const std::vector<std::string>& args, const DataTables& data,
                     std::ostream& out)
{
  if (args.empty())
    throw UsageError("order needs a group");
  std::string k = lower(args[0]);
  std::string name;
  BigInt order;
  if (auto mk = matrix_kind(k)) {
    if (args.size() != 3)
      throw UsageError("'" + args[0] + "' takes a dimension and a field size");
    std::uint64_t dim = parse_uint(args[1], "dimension");
    std::uint64_t q = parse_uint(args[2], "q");
    order = order_matrix_group(*mk, dim, q);
    name = to_string(*mk) + "(" + std::to_string(dim) + "," + std::to_string(q) + ")";
  } else {
    GroupSpec s = parse_group(args, data);
    order = order_simple(s, data);
    name = s.to_string();
  }
  if (g.json)
    out << json{{"group", name}, {"order", order.get_str()}}.dump(2) << "\n";
  else
    out << order.get_str() << "\n";
  return ExitOk;
}

inline int cmd_mpr(const Globals& g, const std::vector<std::string>& args, const std::string& mode,
                   const DataTables& data, std::ostream& out)
{
  GroupSpec s = parse_group(args, data);
  std::string m = lower(mode);
  json j;
  j["group"] = s.to_string();
  DegreeBound d = min_degree_lower(s, data);
  j["degree"] = {{"value", d.d_lower.get_str()}, {"exact", d.is_exact}, {"source", d.source}};
  if (m == "crude") {
    RootPower up = mpr_upper(s, MprMode::Crude, data);
    j["mode"] = "Crude";
    j["upper"] = value_json(up);
    if (!g.json)
      out << s.to_string() << "\nmode: Crude\nupper: " << value_text(up) << "\n";
  } else if (m == "refined" || m == "exact") {
    MprEstimate e = mpr_estimate(s, data);
    if (m == "exact" && e.mode != MprMode::Exact)
      fail(ErrorKind::OutOfRange, "no certified exact value for " + s.to_string());
    j["mode"] = to_string(e.mode);
    j["lower"] = value_json(e.lower);
    j["upper"] = value_json(e.upper);
    j["lower_heuristic"] = e.lower_heuristic;
    if (!g.json) {
      out << s.to_string() << "\nmode: " << to_string(e.mode) << "\n";
      if (e.mode == MprMode::Exact)
        out << "mpr: " << value_text(e.upper) << "\n";
      else {
        out << "lower: " << value_text(e.lower) << (e.lower_heuristic ? "  (degree is only a lower bound)" : "")
            << "\nupper: " << value_text(e.upper) << "\n";
      }
    }
  } else {
    throw UsageError("mode must be crude, refined or exact");
  }
  if (!g.json)
    out << "degree: " << d.d_lower.get_str() << (d.is_exact ? " (exact)" : " (lower bound)") << "\n";
  else
    out << j.dump(2) << "\n";
  return ExitOk;
}

struct BoundArgs {
  std::string preset;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> k;
  std::optional<unsigned long> n;
  std::optional<unsigned long> m;
  std::optional<unsigned long> largest_alt;
  bool sym = false;
  bool sl25 = false;
  bool alt6 = false;
  bool alt7 = false;
  bool residual_empty = false;
  bool refinements = false;
};

inline int cmd_bound(const Globals& g, const BoundArgs& a, std::ostream& out)
{
  std::string preset = lower(a.preset);
  json j;
  auto need_p = [&] {
    if (!a.p)
      throw UsageError("preset '" + a.preset + "' needs --p");
    return *a.p;
  };

  std::optional<Preset> pr;
  if (preset == "coprime")
    pr = Preset::coprime_to(need_p());
  else if (preset == "abelian-sylow")
    pr = Preset::abelian_sylow(need_p());
  else if (preset == "sylow-class") {
    if (!a.k)
      throw UsageError("preset 'sylow-class' needs --k");
    pr = Preset::sylow_class_at_most(need_p(), *a.k);
  } else if (preset == "solvable")
    pr = Preset::solvable();
  else if (!preset.empty())
    throw UsageError("unknown preset '" + a.preset + "'");

  if (pr && (pr->kind == PresetKind::CoprimeTo || pr->kind == PresetKind::AbelianSylow)) {
    PrimeProperty kind = pr->kind == PresetKind::CoprimeTo ? PrimeProperty::Coprime : PrimeProperty::AbelianSylow;
    BoundResult base = prime_property_bound(*a.p, kind);
    j["property"] = pr->to_string();
    j["base"] = bound_json(base);
    if (!g.json) {
      out << "property: " << pr->to_string() << "\n";
      print_bound(out, "base", base);
    }
    if (a.n) {
      BoundResult at_n = prime_property_bound(*a.p, kind, a.n, a.refinements);
      j["degree"] = *a.n;
      j["bound"] = bound_json(at_n);
      if (!g.json) {
        out << "degree: " << *a.n << "\n";
        print_bound(out, "index", at_n);
      }
    }
  } else if (a.n && !pr) {
    BoundResult r = abelian_index_chain(*a.n, a.m);
    j["degree"] = *a.n;
    j["bound"] = bound_json(r);
    if (!g.json) {
      out << "degree: " << *a.n << "\n";
      print_bound(out, "index", r);
    }
  } else {
    PropertyDescriptor d;
    if (pr) {
      if (a.largest_alt)
        throw UsageError("--largest-alt is derived from the preset");
      d = PropertyDescriptor::from_preset(*pr);
    } else {
      d.largest_alt = a.largest_alt.value_or(none_above_4);
      d.sym_m_in_as = a.sym;
      d.has_sl25 = a.sl25;
      d.has_3alt6 = a.alt6;
      d.has_2alt7 = a.alt7;
      d.residual_empty = a.residual_empty;
    }
    j["property"] = pr ? pr->to_string() : "descriptor";
    j["largest_alt"] = d.largest_alt < 5 ? json("none_above_4") : json(d.largest_alt);
    if (!g.json) {
      out << "property: " << (pr ? pr->to_string() : "descriptor") << "\n";
      out << "largest alternating degree: " << (d.largest_alt < 5 ? "none above 4" : std::to_string(d.largest_alt))
          << "\n";
    }
    if (!d.caveat.empty()) {
      j["caveat"] = d.caveat;
      if (!g.json)
        out << "caveat: " << d.caveat << "\n";
    }
    RootPower ell = ell_upper(d);
    AlphaBetaGamma abg = alpha_beta_gamma(d);
    j["ell"] = value_json(ell);
    j["alpha"] = bound_json(abg.alpha);
    j["beta"] = bound_json(abg.beta);
    j["gamma"] = bound_json(abg.gamma);
    if (!g.json) {
      out << "l upper: " << value_text(ell) << "\n";
      print_bound(out, "alpha", abg.alpha);
      print_bound(out, "beta", abg.beta);
      print_bound(out, "gamma", abg.gamma);
    }
    if (d.largest_alt >= 5) {
      BoundResult br = alternating_bracket(d.largest_alt);
      j["bracket"] = bound_json(br);
      if (!g.json)
        print_bound(out, "bracket", br);
    }
  }
  if (g.json)
    out << j.dump(2) << "\n";
  return ExitOk;
}

inline int cmd_verify(const Globals& g, const std::vector<std::string>& select, const std::string& format,
                      const DataTables& data, std::ostream& out)
{
  std::string f = lower(format);
  if (f != "text" && f != "json")
    throw UsageError("format must be text or json");
  Report r = run_claims(grid_from(g), select, g.workers, data);
  out << render_report(r, g.json || f == "json" ? ReportFormat::Json : ReportFormat::Text);
  return exit_status(r);
}

inline int cmd_table(const Globals& g, const std::string& which, const DataTables& data, std::ostream& out)
{
  std::string w = lower(which);
  json j = json::array();
  if (w == "sporadic") {
    for (const SporadicRecord& r : data.sporadic()) {
      j.push_back({{"name", r.name},
                   {"order", r.order.get_str()},
                   {"out_order", r.out_order},
                   {"min_proj_degree", r.min_proj_degree},
                   {"source", r.source}});
      if (!g.json)
        out << r.name << "  order " << r.order.get_str() << "  out " << r.out_order << "  d " << r.min_proj_degree
            << "\n";
    }
  } else if (w == "exceptional") {
    for (const ExceptionalRow& r : data.exceptional()) {
      j.push_back({{"family", r.family},
                   {"condition", r.condition},
                   {"order", r.order},
                   {"out", r.out},
                   {"degree", r.degree},
                   {"degree_exact", r.degree_exact},
                   {"source", r.source}});
      if (!g.json)
        out << r.family << " [" << r.condition << "]  order " << r.order << "  out " << r.out << "  d "
            << r.degree << (r.degree_exact ? " (exact)" : " (lower bound)") << "\n";
    }
  } else if (w == "inertia") {
    for (const InertiaOverride& r : data.inertia()) {
      j.push_back({{"group", r.group}, {"degree", r.degree}, {"verified_index", r.verified_index},
                   {"citation", r.citation}});
      if (!g.json)
        out << r.group << "  degree " << r.degree << "  index " << r.verified_index << "\n";
    }
  } else if (w == "hashes") {
    j = json::object();
    for (const auto& [file, hash] : data.hashes()) {
      j[file] = hash;
      if (!g.json)
        out << file << "  " << hash << "\n";
    }
  } else {
    throw UsageError("table must be sporadic, exceptional, inertia or hashes");
  }
  if (g.json)
    out << j.dump(2) << "\n";
  return ExitOk;
}

/// Parses args (without the program name) and runs one subcommand.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact bounds for finite linear groups and simple group ratios", "jordan_cli"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_option("--grid", g.grid, "Cap on q^m (and on the prime q) for grid sweeps")->check(CLI::Range(16ull, 1ull << 32));
  app.add_option("--workers", g.workers, "Worker threads for verify")->check(CLI::Range(1u, 256u));
  app.add_option("--data-dir", g.data_dir, "Directory with replacement data tables")->check(CLI::ExistingDirectory);

  std::vector<std::string> order_args;
  auto* order = app.add_subcommand("order", "Order of a matrix group (gl|sl|sp|su|u DIM Q) or a simple group");
  order->add_option("group", order_args, "Group description")->required();

  std::vector<std::string> mpr_args;
  std::string mode = "refined";
  auto* mpr = app.add_subcommand("mpr", "Bounds for the maximum projective ratio of a simple group");
  mpr->add_option("group", mpr_args, "Group description")->required();
  mpr->add_option("--mode", mode, "crude | refined | exact")->capture_default_str();

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Bounds for a property of finite groups, or for a linear group");
  bound->add_option("--preset", ba.preset, "solvable | coprime | abelian-sylow | sylow-class");
  bound->add_option("--p", ba.p, "Prime for the preset");
  bound->add_option("--k", ba.k, "Class bound for sylow-class");
  bound->add_option("--n", ba.n, "Degree of the linear group");
  bound->add_option("--m", ba.m, "Largest alternating composition factor degree");
  bound->add_option("--largest-alt", ba.largest_alt, "Largest m with Alt_m having the property");
  bound->add_flag("--sym", ba.sym, "Sym_m has the property");
  bound->add_flag("--sl25", ba.sl25, "SL(2,5) has the property");
  bound->add_flag("--3alt6", ba.alt6, "3.Alt6 has the property");
  bound->add_flag("--2alt7", ba.alt7, "2.Alt7 has the property");
  bound->add_flag("--residual-empty", ba.residual_empty, "No residual almost simple group has the property");
  bound->add_flag("--refinements", ba.refinements, "Apply refinements stated without full proof");

  std::vector<std::string> select;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "Evaluate the claim registry exactly");
  verify->add_option("--select", select, "Claim id prefixes to run");
  verify->add_option("--format", format, "text | json")->capture_default_str();

  std::string which;
  auto* table = app.add_subcommand("table", "Print a data table");
  table->add_option("which", which, "sporadic | exceptional | inertia | hashes")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return ExitUsage;
  }

  try {
    DataTables loaded;
    const DataTables* data = &DataTables::embedded();
    if (!g.data_dir.empty()) {
      loaded = DataTables::load(g.data_dir);
      data = &loaded;
    }
    if (*order)
      return cmd_order(g, order_args, *data, out);
    if (*mpr)
      return cmd_mpr(g, mpr_args, mode, *data, out);
    if (*bound)
      return cmd_bound(g, ba, out);
    if (*verify)
      return cmd_verify(g, select, format, *data, out);
    if (*table)
      return cmd_table(g, which, *data, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return ExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceExceeded ? ExitResource : ExitUsage;
  }
  return ExitUsage;
}

} // namespace jordan::cli

#endif // JORDAN_TOOLS_CLI_HPP
