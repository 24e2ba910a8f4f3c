// gpid: values, constructions, solvers and proof audits for generalized
// Petersen graphs P(n,k).

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gpid/audit.hpp"
#include "gpid/constructions.hpp"
#include "gpid/formulas.hpp"
#include "gpid/io.hpp"
#include "gpid/reproduce.hpp"
#include "gpid/solver.hpp"

using namespace gpid;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kUnavailable = 3 };

struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("range", "expected an integer or a..b, got '" + text + "'");
  }
}

struct RunConfig {
  std::string n_text;
  std::string k_text;
  std::string invariant = "italian";
  std::string method;
  std::string format = "text";
  std::uint64_t budget = 2'000'000;
  std::string out_path;
  std::string only;
  std::vector<std::string> mods;
  bool enumerate_optimal = false;
  int weight_cap = -1;
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::string matrix;
  std::string labeling_path;
  bool no_timings = false;
};

struct Residue {
  int m;
  int r;
};

std::vector<Residue> parse_mods(const std::vector<std::string>& specs) {
  std::vector<Residue> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(s);
      const int m = std::stoi(s.substr(0, eq));
      const int r = std::stoi(s.substr(eq + 1));
      if (m <= 0) throw std::invalid_argument(s);
      out.push_back({m, ((r % m) + m) % m});
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--mod", "expected m=r, got '" + s + "'");
    }
  }
  return out;
}

// Admissible (n,k) pairs in (n, k) order. A single explicit pair that is not
// admissible is passed through so the library reports it.
std::vector<std::pair<int, int>> instances(const RunConfig& cfg) {
  if (cfg.n_text.empty() || cfg.k_text.empty()) {
    throw CLI::ValidationError("instance", "--n and --k are required");
  }
  const Range nr = parse_range(cfg.n_text);
  const Range kr = parse_range(cfg.k_text);
  const auto mods = parse_mods(cfg.mods);
  std::vector<std::pair<int, int>> out;
  if (nr.lo == nr.hi && kr.lo == kr.hi) {
    out.emplace_back(nr.lo, kr.lo);
    return out;
  }
  for (int n = nr.lo; n <= nr.hi; ++n) {
    bool keep = true;
    for (const auto& md : mods) keep = keep && n % md.m == md.r;
    if (!keep) continue;
    for (int k = kr.lo; k <= kr.hi; ++k) {
      if (admissible(n, k)) out.emplace_back(n, k);
    }
  }
  return out;
}

std::string default_method(int k) { return k <= 3 ? "dp" : "bnb"; }

// ---- value ------------------------------------------------------------------

struct ValueRow {
  int n;
  int k;
  std::string method;
  std::string kind;
  long long value = 0;
  long long lo = 0;
  long long hi = 0;
  std::string source;
  Json json;
};

ValueRow value_row(const RunConfig& cfg, Invariant inv, int n, int k) {
  const std::string method = cfg.method.empty() ? "formula" : cfg.method;
  ValueRow row{n, k, method, "", 0, 0, 0, "", {}};
  if (method == "formula") {
    const FormulaResult f = inv == Invariant::italian      ? italian_value(n, k)
                            : inv == Invariant::rainbow2   ? rainbow2_value(n, k)
                                                           : domination_value(n, k);
    row.kind = to_string(f.kind);
    row.value = f.value;
    row.lo = f.kind == FormulaResult::Kind::bounds ? f.lo : f.value;
    row.hi = f.kind == FormulaResult::Kind::bounds ? f.hi : f.value;
    row.source = f.source;
    row.json = to_json(f);
  } else if (method == "dp" || method == "exhaustive") {
    const SolveResult r = method == "dp" ? solve_dp(n, k, inv) : solve_exhaustive(PetersenGraph(n, k), inv);
    row.kind = "exact";
    row.value = row.lo = row.hi = r.optimum;
    row.source = method;
    row.json = to_json(r);
  } else if (method == "bnb") {
    const auto out = solve_branch_and_bound(PetersenGraph(n, k), inv, cfg.budget);
    if (const auto* r = std::get_if<SolveResult>(&out)) {
      row.kind = "exact";
      row.value = row.lo = row.hi = r->optimum;
      row.json = to_json(*r);
    } else {
      const auto& b = std::get<BoundsOnly>(out);
      row.kind = "bounds";
      row.lo = b.lo;
      row.hi = b.hi;
      row.json = to_json(b, inv, n, k);
    }
    row.source = "branch_and_bound";
  } else if (method == "construct") {
    if (inv != Invariant::italian) throw InvalidParameters("constructions exist for italian only");
    std::optional<ConstructionResult> c;
    if (k == 1) c = construct_pn1(n);
    else if (k == 2) c = construct_pn2(n);
    else if (k >= 4) c = construct_pnk(n, k);
    if (!c || !c->valid) {
      row.kind = "unknown";
      row.source = c ? "construction invalid" : "no construction for this residue";
      row.json = Json{{"kind", "unknown"}, {"theorem", row.source}};
    } else {
      row.kind = "upper";
      row.hi = row.value = c->actual_weight;
      row.lo = degree_lower_bound(PetersenGraph(n, k));
      row.source = "construction: " + c->case_name;
      row.json = to_json(*c);
    }
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  }
  return row;
}

int cmd_value(const RunConfig& cfg, std::ostream& os) {
  const Invariant inv = parse_invariant(cfg.invariant);
  std::vector<ValueRow> rows;
  for (auto [n, k] : instances(cfg)) rows.push_back(value_row(cfg, inv, n, k));

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (auto& r : rows) {
      Json item{{"n", r.n}, {"k", r.k}, {"invariant", to_string(inv)}, {"method", r.method}};
      item["result"] = std::move(r.json);
      arr.push_back(std::move(item));
    }
    os << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "n,k,invariant,method,kind,value,lo,hi,source\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.k << ',' << to_string(inv) << ',' << r.method << ',' << r.kind << ','
         << (r.kind == "exact" || r.kind == "upper" ? std::to_string(r.value) : "") << ','
         << (r.kind == "unknown" || r.kind == "external" ? "" : std::to_string(r.lo)) << ','
         << (r.kind == "unknown" || r.kind == "external" ? "" : std::to_string(r.hi)) << ",\""
         << r.source << "\"\n";
    }
  } else {
    for (const auto& r : rows) {
      os << "P(" << r.n << ',' << r.k << ") " << to_string(inv) << ": ";
      if (r.kind == "exact") os << r.value << " (exact; " << r.source << ")";
      else if (r.kind == "bounds") os << "[" << r.lo << ", " << r.hi << "] (bounds; " << r.source << ")";
      else if (r.kind == "upper") os << "<= " << r.value << " (" << r.source << ")";
      else os << "? (" << r.kind << "; " << r.source << ")";
      os << '\n';
    }
  }
  return kOk;
}

// ---- construct --------------------------------------------------------------

int cmd_construct(const RunConfig& cfg, std::ostream& os) {
  int status = kOk;
  Json arr = Json::array();
  if (cfg.format == "csv") os << "n,k,case,claimed_weight,actual_weight,valid\n";
  for (auto [n, k] : instances(cfg)) {
    std::optional<ConstructionResult> c;
    if (k == 1) c = construct_pn1(n);
    else if (k == 2) c = construct_pn2(n);
    else if (k >= 4) c = construct_pnk(n, k);
    else PetersenGraph(n, k);  // rejects inadmissible input

    if (!c) {
      std::string why = k == 2 ? "residue " + std::to_string(n % 10) + " mod 10 has no explicit pattern"
                               : "no explicit pattern for k = 3";
      if (cfg.format == "json") {
        arr.push_back(Json{{"n", n}, {"k", k}, {"unavailable", why}});
      } else if (cfg.format == "csv") {
        os << n << ',' << k << ",unavailable,,,\n";
      } else {
        os << "P(" << n << ',' << k << "): unavailable (" << why << ")\n";
      }
      if (status == kOk) status = kUnavailable;
      continue;
    }
    if (!c->valid) status = kViolation;
    if (cfg.format == "json") {
      arr.push_back(to_json(*c));
    } else if (cfg.format == "csv") {
      os << n << ',' << k << ",\"" << c->case_name << "\"," << rational_string(c->claimed_weight) << ','
         << c->actual_weight << ',' << (c->valid ? "true" : "false") << '\n';
    } else {
      os << "P(" << n << ',' << k << ") " << c->case_name << "\n"
         << render_matrix(c->labeling) << "\n"
         << "weight " << c->actual_weight << " (claimed " << rational_string(c->claimed_weight) << "), "
         << (c->valid ? "valid" : "INVALID");
      if (!c->valid) {
        os << " at vertices";
        for (const auto& v : c->violations) os << ' ' << v.vertex;
      }
      os << '\n';
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return status;
}

// ---- solve ------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& os) {
  const Invariant inv = parse_invariant(cfg.invariant);
  Json arr = Json::array();
  if (cfg.format == "csv") os << "n,k,invariant,method,lo,hi,explored\n";
  for (auto [n, k] : instances(cfg)) {
    const std::string method = cfg.method.empty() ? default_method(k) : cfg.method;
    const PetersenGraph g(n, k);
    BnbOutcome out;
    if (method == "dp") out = solve_dp(n, k, inv);
    else if (method == "exhaustive") out = solve_exhaustive(g, inv);
    else if (method == "bnb") out = solve_branch_and_bound(g, inv, cfg.budget);
    else throw CLI::ValidationError("--method", "solve accepts dp, exhaustive or bnb");

    const Witness& w = std::holds_alternative<SolveResult>(out) ? std::get<SolveResult>(out).witness
                                                                : std::get<BoundsOnly>(out).incumbent;
    const int lo = std::holds_alternative<SolveResult>(out) ? std::get<SolveResult>(out).optimum
                                                            : std::get<BoundsOnly>(out).lo;
    const int hi = std::holds_alternative<SolveResult>(out) ? lo : std::get<BoundsOnly>(out).hi;
    const std::uint64_t explored = std::holds_alternative<SolveResult>(out)
                                       ? std::get<SolveResult>(out).explored
                                       : std::get<BoundsOnly>(out).explored;
    if (cfg.format == "json") {
      arr.push_back(std::holds_alternative<SolveResult>(out) ? to_json(std::get<SolveResult>(out))
                                                              : to_json(std::get<BoundsOnly>(out), inv, n, k));
    } else if (cfg.format == "csv") {
      os << n << ',' << k << ',' << to_string(inv) << ',' << method << ',' << lo << ',' << hi << ','
         << explored << '\n';
    } else {
      os << "P(" << n << ',' << k << ") " << to_string(inv) << " via " << method << ": ";
      if (lo == hi) os << lo;
      else os << "[" << lo << ", " << hi << "]";
      os << " (explored " << explored << ")\n";
      if (inv == Invariant::italian || inv == Invariant::domination) {
        os << render_matrix(witness_as_labeling(g, w)) << '\n';
      } else {
        const int nn = g.n();
        for (int row = 0; row < 2; ++row) {
          for (int i = 0; i < nn; ++i) os << (i ? " " : "") << rainbow_label_string(w[2 * i + row]);
          os << (row == 0 ? " /\n" : "\n");
        }
      }
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return kOk;
}

// ---- audit ------------------------------------------------------------------

std::optional<Labeling> provided_labeling(const RunConfig& cfg) {
  if (!cfg.matrix.empty()) {
    const Range nr = parse_range(cfg.n_text);
    const Range kr = parse_range(cfg.k_text);
    if (nr.lo != nr.hi || kr.lo != kr.hi) {
      throw CLI::ValidationError("--matrix", "a single --n and --k are required with --matrix");
    }
    return parse_matrix(cfg.matrix, nr.lo, kr.lo);
  }
  if (!cfg.labeling_path.empty()) {
    std::ifstream in(cfg.labeling_path);
    if (!in) throw CLI::ValidationError("--labeling", "cannot open " + cfg.labeling_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw FormatError(e.what());
    }
    return labeling_from_json(j);
  }
  return std::nullopt;
}

int audit_single(const std::string& which, const Labeling& f, const RunConfig& cfg, std::ostream& os) {
  const PetersenGraph g(f.n(), f.k());
  bool ok = true;
  Json j;
  std::ostringstream text;
  if (which == "bagging") {
    const auto c = bagging_certificate(g, f);
    ok = c.consistent();
    j = to_json(c);
    text << "m = " << c.m[0] << ' ' << c.m[1] << ' ' << c.m[2] << ' ' << c.m[3] << ' ' << c.m[4]
         << ", columns " << c.column_count() << ", weighted bound " << c.weighted_bound()
         << ", weight " << c.weight << ", conflicts " << c.conflicts.size() << '\n';
  } else if (which == "discharge") {
    const auto d = discharge(g, f);
    ok = d.identity_holds() && (!validate_idf(g, f).valid || d.min_g_tenths() >= 4);
    j = to_json(d);
    text << "g(V) = " << tenths_string(d.g_total_tenths) << ", r(V) = " << tenths_string(d.r_total_tenths)
         << ", min g(v) = " << tenths_string(d.min_g_tenths()) << ", identity "
         << (d.identity_holds() ? "holds" : "FAILS") << '\n';
  } else if (which == "findings") {
    const auto r = check_findings(g, f);
    ok = !r.any_violation();
    j = to_json(r);
    text << "r(V) = " << tenths_string(r.r_total_tenths) << '\n';
    for (const auto& s : r.findings) {
      text << "  finding " << s.id << ": " << (s.hypothesis ? "applies" : "vacuous")
           << (s.violated() ? ", VIOLATED" : "") << '\n';
    }
  } else {
    const auto r = check_column_lemma(g, f);
    ok = r.holds();
    j = Json{{"zero_columns", r.zero_columns}, {"counterexamples", r.counterexamples}, {"holds", r.holds()}};
    text << "zero columns " << r.zero_columns << ", counterexamples " << r.counterexamples.size() << '\n';
  }
  if (cfg.format == "json") os << j.dump(2) << '\n';
  else os << (ok ? "ok: " : "violation: ") << text.str();
  return ok ? kOk : kViolation;
}

int cmd_audit(const std::string& which, const RunConfig& cfg, std::ostream& os) {
  if (auto f = provided_labeling(cfg)) return audit_single(which, *f, cfg, os);

  int status = kOk;
  Json arr = Json::array();
  bool header = true;
  for (auto [n, k] : instances(cfg)) {
    SweepOptions opts;
    opts.collect_rows = cfg.format == "csv";
    opts.max_weight = cfg.weight_cap;
    if (cfg.enumerate_optimal) {
      const int opt = solve_dp(n, k, Invariant::italian).optimum;
      opts.min_weight = opt;
      opts.max_weight = opt;
    }
    const int family = which == "bagging" || which == "column-lemma" ? 1 : 2;
    if (k != family) {
      throw WrongFamily(which + " applies to P(n," + std::to_string(family) + ") only, got k=" +
                        std::to_string(k));
    }
    SweepReport rep;
    if (which == "bagging") rep = sweep_bagging(n, opts);
    else if (which == "column-lemma") rep = sweep_column_lemma(n, opts);
    else if (which == "discharge") rep = sweep_discharge(n, opts);
    else rep = sweep_findings(n, opts);

    if (!rep.passed()) status = kViolation;
    if (cfg.format == "json") {
      arr.push_back(to_json(rep));
    } else if (cfg.format == "csv") {
      write_sweep_csv(os, rep, header);
      header = false;
    } else {
      os << "P(" << n << ',' << k << ") " << which << ": " << rep.labelings << " labelings, weight "
         << rep.min_weight << ".." << rep.max_weight << ", " << rep.violations << " violations\n";
      for (const auto& e : rep.examples) os << "  " << e << '\n';
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  return status;
}

// ---- render -----------------------------------------------------------------

int cmd_render(const RunConfig& cfg, std::ostream& os) {
  if (auto f = provided_labeling(cfg)) {
    const PetersenGraph g(f->n(), f->k());
    const auto report = validate_idf(g, *f);
    if (cfg.format == "json") {
      os << to_json(*f).dump(2) << '\n';
    } else {
      os << render_matrix(*f) << '\n' << "weight " << f->weight() << ", "
         << (report.valid ? "valid IDF" : "not an IDF") << '\n';
    }
    return kOk;
  }
  const auto pairs = instances(cfg);
  Json arr = Json::array();
  for (auto [n, k] : pairs) {
    const PetersenGraph g(n, k);
    if (cfg.format == "json") arr.push_back(graph_descriptor(g));
    else write_edge_list(os, g);
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return kOk;
}

// ---- verify-theorems --------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto checks = select_checks(cfg.only);
  if (checks.empty()) throw CLI::ValidationError("--only", "no check matches '" + cfg.only + "'");
  ReproduceOptions opts{cfg.n_max, cfg.k_max};
  const bool detailed = !cfg.only.empty();
  bool all = true;
  Json arr = Json::array();
  for (const auto* spec : checks) {
    const auto out = run_check(*spec, opts);
    all = all && out.passed;
    if (cfg.format == "json") {
      Json item{{"id", out.id}, {"title", out.title}, {"passed", out.passed}, {"rows", out.rows}, {"notes", out.notes}};
      if (!cfg.no_timings) item["seconds"] = out.seconds;
      arr.push_back(std::move(item));
      continue;
    }
    os << (out.passed ? "✓ " : "✗ ") << std::left << std::setw(18) << out.id << out.title;
    if (!cfg.no_timings) os << "  (" << std::fixed << std::setprecision(2) << out.seconds << " s)";
    os << '\n';
    if (detailed || !out.passed) {
      for (const auto& r : out.rows) {
        if (detailed || r.find("FAIL") != std::string::npos) os << "    " << r << '\n';
      }
      for (const auto& n : out.notes) os << "    note: " << n << '\n';
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  return all ? kOk : kViolation;
}

void add_instance_flags(CLI::App* sub, RunConfig& cfg) {
  auto* n = sub->add_option("--n", cfg.n_text, "n or range a..b");
  sub->add_option("--n-range", cfg.n_text, "n range a..b")->excludes(n);
  auto* k = sub->add_option("--k", cfg.k_text, "k or range a..b");
  sub->add_option("--k-range", cfg.k_text, "k range a..b")->excludes(k);
  sub->add_option("--mod", cfg.mods, "keep n with n = r (mod m), given as m=r");
  sub->add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Italian domination of generalized Petersen graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* value = app.add_subcommand("value", "gamma values from formulas or solvers");
  add_instance_flags(value, cfg);
  value->add_option("--invariant", cfg.invariant, "italian, domination or rainbow2");
  value->add_option("--method", cfg.method, "formula, dp, exhaustive, bnb or construct")
      ->check(CLI::IsMember({"formula", "dp", "exhaustive", "bnb", "construct"}));
  value->add_option("--budget", cfg.budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "explicit IDF constructions");
  add_instance_flags(construct, cfg);

  auto* solve = app.add_subcommand("solve", "exact optimum with witness");
  add_instance_flags(solve, cfg);
  solve->add_option("--invariant", cfg.invariant, "italian, domination or rainbow2");
  solve->add_option("--method", cfg.method, "dp, exhaustive or bnb")
      ->check(CLI::IsMember({"dp", "exhaustive", "bnb"}));
  solve->add_option("--budget", cfg.budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "proof audits on a labeling or by enumeration");
  audit->require_subcommand(1);
  std::string audit_kind;
  for (const char* name : {"bagging", "discharge", "findings", "column-lemma"}) {
    auto* sub = audit->add_subcommand(name, std::string(name) + " audit");
    add_instance_flags(sub, cfg);
    sub->add_flag("--enumerate-optimal", cfg.enumerate_optimal, "only labelings of optimal weight");
    sub->add_option("--weight-cap", cfg.weight_cap, "largest weight enumerated");
    sub->add_option("--matrix", cfg.matrix, "audit this labeling (two-row matrix text)");
    sub->add_option("--labeling", cfg.labeling_path, "audit the labeling in this JSON file");
    sub->final_callback([&audit_kind, name] { audit_kind = name; });
  }

  auto* render = app.add_subcommand("render", "edge list / descriptor, or a labeling as a matrix");
  add_instance_flags(render, cfg);
  render->add_option("--matrix", cfg.matrix, "labeling as two-row matrix text");
  render->add_option("--labeling", cfg.labeling_path, "labeling JSON file");

  auto* verify = app.add_subcommand("verify-theorems", "run the reproduction checks");
  verify->add_option("--only", cfg.only, "run checks whose id starts with this prefix");
  verify->add_option("--n-max", cfg.n_max, "largest n swept");
  verify->add_option("--k-max", cfg.k_max, "largest k swept");
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--no-timings", cfg.no_timings, "omit wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out_path << '\n';
      return kUsage;
    }
    os = &file;
  }

  try {
    if (value->parsed()) return cmd_value(cfg, *os);
    if (construct->parsed()) return cmd_construct(cfg, *os);
    if (solve->parsed()) return cmd_solve(cfg, *os);
    if (audit->parsed()) return cmd_audit(audit_kind, cfg, *os);
    if (render->parsed()) return cmd_render(cfg, *os);
    if (verify->parsed()) return cmd_verify(cfg, *os);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
