#include "gpid/reproduce.hpp"

#include <chrono>
#include <sstream>

#include "gpid/audit.hpp"
#include "gpid/constructions.hpp"
#include "gpid/formulas.hpp"
#include "gpid/solver.hpp"

namespace gpid {

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

void record(CheckOutcome& out, bool ok, std::string row) {
  out.passed = out.passed && ok;
  out.rows.push_back(cat(std::move(row), "  ", mark(ok)));
}

long long ceil45(int n) { return (4LL * n + 4) / 5; }

CheckOutcome pn1_exact(const ReproduceOptions& o) {
  CheckOutcome out;
  for (int n = 3; n <= o.n_max.value_or(16); ++n) {
    const auto dp = solve_dp(n, 1, Invariant::italian);
    const auto c = construct_pn1(n);
    const bool ok = dp.optimum == n && c.valid && c.actual_weight == n &&
                    validate_witness(PetersenGraph(n, 1), Invariant::italian, dp.witness).valid;
    record(out, ok, cat("n=", n, " dp=", dp.optimum, " construction=", c.actual_weight,
                        c.valid ? " valid" : " invalid"));
  }
  return out;
}

CheckOutcome pn2_exact(const ReproduceOptions& o) {
  CheckOutcome out;
  for (int n = 5; n <= o.n_max.value_or(20); ++n) {
    const long long expected = ceil45(n) + ((n % 5 == 1 || n % 5 == 2) ? 1 : 0);
    const auto dp = solve_dp(n, 2, Invariant::italian);
    const long long formula = italian_value(n, 2).value;
    record(out, dp.optimum == expected && formula == expected,
           cat("n=", n, " dp=", dp.optimum, " expected=", expected, " formula=", formula));
  }
  return out;
}

CheckOutcome pn2_constructions(const ReproduceOptions&) {
  CheckOutcome out;
  for (int n : {5, 8, 10, 15, 18, 20, 25, 28}) {
    const auto c = construct_pn2(n);
    const bool ok = c && c->valid && c->actual_weight == ceil45(n) && c->claimed_matches();
    record(out, ok, cat("n=", n, " weight=", c ? c->actual_weight : -1, " target=", ceil45(n)));
  }
  return out;
}

CheckOutcome pnk_exact_family(const ReproduceOptions&) {
  CheckOutcome out;
  for (auto [k, n] : {std::pair{7, 15}, {8, 20}, {12, 25}, {13, 30}}) {
    const auto c = construct_pnk(n, k);
    const int lb = degree_lower_bound(PetersenGraph(n, k));
    const bool ok = c.valid && c.actual_weight * 5 == 4 * n && lb * 5 == 4 * n;
    record(out, ok, cat("k=", k, " n=", n, " construction=", c.actual_weight, " lower=", lb,
                        c.valid ? " valid" : " invalid"));
  }
  return out;
}

CheckOutcome pnk_bound_family(const ReproduceOptions& o) {
  CheckOutcome out;
  const int n_max = o.n_max.value_or(60);
  for (int k = 4; k <= o.k_max.value_or(12); ++k) {
    int valid = 0;
    int invalid = 0;
    int repaired = 0;
    for (int n = 2 * k + 1; n <= n_max; ++n) {
      const auto c = construct_pnk(n, k);
      const long long bound = pnk_upper_bound(n, k);
      if (c.valid) {
        ++valid;
        if (c.actual_weight > bound) {
          record(out, false, cat("k=", k, " n=", n, " weight=", c.actual_weight, " bound=", bound));
        }
        continue;
      }
      ++invalid;
      const PetersenGraph g(n, k);
      const Witness seed(c.labeling.values().begin(), c.labeling.values().end());
      const auto bnb = solve_branch_and_bound(g, Invariant::italian, 20000, seed);
      const int hi = std::holds_alternative<SolveResult>(bnb) ? std::get<SolveResult>(bnb).optimum
                                                                : std::get<BoundsOnly>(bnb).hi;
      if (hi <= bound) ++repaired;
      out.notes.push_back(cat("k=", k, " n=", n, " (", c.case_name, "): construction invalid at ",
                              c.violations.size(), " vertices; repaired incumbent ", hi,
                              " vs bound ", bound));
      if (hi > bound) {
        record(out, false, cat("k=", k, " n=", n, " incumbent=", hi, " bound=", bound));
      }
    }
    record(out, valid + repaired == valid + invalid,
           cat("k=", k, " valid=", valid, " invalid=", invalid, " repaired_within_bound=", repaired));
  }
  return out;
}

CheckOutcome oracle_equivalence(const ReproduceOptions&) {
  CheckOutcome out;
  for (int n = 3; 2 * n <= kExhaustiveMaxVertices; ++n) {
    for (int k = 1; k <= 3 && 2 * k < n; ++k) {
      const PetersenGraph g(n, k);
      for (auto kind : {Invariant::italian, Invariant::domination, Invariant::rainbow2}) {
        if (kind == Invariant::rainbow2 && 2 * n > kExhaustiveMaxVerticesRainbow) continue;
        const auto dp = solve_dp(n, k, kind);
        const auto ex = solve_exhaustive(g, kind);
        record(out, dp.optimum == ex.optimum,
               cat("n=", n, " k=", k, " ", to_string(kind), " dp=", dp.optimum,
                   " exhaustive=", ex.optimum));
      }
    }
  }
  return out;
}

CheckOutcome cited_formulas(const ReproduceOptions& o) {
  CheckOutcome out;
  for (int k = 1; k <= 2; ++k) {
    for (int n = 2 * k + 1; n <= o.n_max.value_or(16); ++n) {
      for (auto kind : {Invariant::domination, Invariant::rainbow2}) {
        const auto f = kind == Invariant::domination ? domination_value(n, k) : rainbow2_value(n, k);
        const auto dp = solve_dp(n, k, kind);
        if (!f.is_exact()) {
          out.notes.push_back(cat("n=", n, " k=", k, " ", to_string(kind),
                                  ": no formula in range, solver gives ", dp.optimum));
          continue;
        }
        record(out, dp.optimum == f.value,
               cat("n=", n, " k=", k, " ", to_string(kind), " dp=", dp.optimum, " formula=", f.value));
      }
    }
  }
  return out;
}

CheckOutcome discharge_identity(const ReproduceOptions&) {
  CheckOutcome out;
  for (int n : {6, 7}) {
    SweepOptions opts;
    opts.max_weight = static_cast<int>(italian_value(n, 2).value) + 1;
    const auto rep = sweep_discharge(n, opts);
    record(out, rep.passed() && rep.labelings > 0,
           cat("n=", n, " weight<=", opts.max_weight, " labelings=", rep.labelings,
               " violations=", rep.violations));
  }
  for (int n = 5; n <= 12; ++n) {
    const auto rep = sweep_discharge_random(n, 10000, 0x5eed0000u + n);
    record(out, rep.passed(),
           cat("n=", n, " random=", rep.labelings, " violations=", rep.violations));
  }
  return out;
}

CheckOutcome findings_sweep(const ReproduceOptions&) {
  CheckOutcome out;
  for (int n : {6, 7}) {
    const auto rep = sweep_findings(n, SweepOptions{});
    record(out, rep.passed() && rep.labelings > 0,
           cat("n=", n, " labelings=", rep.labelings, " violations=", rep.violations));
  }
  return out;
}

CheckOutcome bagging(const ReproduceOptions&) {
  CheckOutcome out;
  for (int n = 4; n <= 8; ++n) {
    SweepOptions below;
    below.max_weight = n - 1;
    const auto none = sweep_bagging(n, below);
    SweepOptions optimal;
    optimal.min_weight = n;
    optimal.max_weight = n;
    const auto rep = sweep_bagging(n, optimal);
    record(out, none.labelings == 0 && rep.labelings > 0 && rep.passed(),
           cat("n=", n, " optimal=", rep.labelings, " below_n=", none.labelings,
               " inconsistent=", rep.violations));
  }
  return out;
}

CheckOutcome classification(const ReproduceOptions& o) {
  CheckOutcome out;
  const int n_max = o.n_max.value_or(16);
  for (int k = 1; k <= 2; ++k) {
    for (int n = k == 1 ? 4 : 5; n <= n_max; ++n) {
      const auto v = italian_graph_predicate(n, k);
      const int gi = solve_dp(n, k, Invariant::italian).optimum;
      const int gd = solve_dp(n, k, Invariant::domination).optimum;
      const bool ok = v.gamma_i == gi && v.twice_gamma == 2 * gd && v.is_italian == (gi == 2 * gd);
      record(out, ok, cat("italian-graph n=", n, " k=", k, " (", gi, ",", 2 * gd, ") predicate=",
                          v.is_italian ? "true" : "false"));
    }
  }
  for (int k = 1; k <= 2; ++k) {
    for (int n = 2 * k + 1; n <= std::min(n_max, 12); ++n) {
      const auto rel = relation_report(n, k);
      const int gi = solve_dp(n, k, Invariant::italian).optimum;
      const int gr = solve_dp(n, k, Invariant::rainbow2).optimum;
      if (rel.relation == Relation::unknown) {
        out.notes.push_back(cat("relation n=", n, " k=", k, ": no formula, solver gives (", gi, ",", gr, ")"));
        continue;
      }
      const Relation solved = gi == gr ? Relation::equal
                                       : (gi + 1 == gr ? Relation::italian_one_less : Relation::unknown);
      record(out, solved == rel.relation && *rel.gamma_i == gi && *rel.gamma_r2 == gr,
             cat("relation n=", n, " k=", k, " (", gi, ",", gr, ") ", to_string(rel.relation)));
    }
  }
  return out;
}

}  // namespace

const std::vector<CheckSpec>& reproduction_checks() {
  static const std::vector<CheckSpec> checks = {
      {"thm-2.3", "P(n,1): gamma_I = n by DP and construction", 10, pn1_exact},
      {"thm-3.6", "P(n,2): gamma_I piecewise by DP", 60, pn2_exact},
      {"thm-3.3", "P(n,2): explicit constructions at ceil(4n/5)", 1, pn2_constructions},
      {"thm-4.1-exact", "P(n,k): construction meets the degree bound", 5, pnk_exact_family},
      {"thm-4.1-bound", "P(n,k): constructions within the general upper bound", 300, pnk_bound_family},
      {"oracle", "DP agrees with exhaustive search", 120, oracle_equivalence},
      {"cited", "gamma and gamma_r2 formulas agree with DP", 120, cited_formulas},
      {"thm-3.5-discharge", "Discharging identity and per-vertex charge", 180, discharge_identity},
      {"thm-3.5-findings", "Local findings hold on every IDF of P(6,2), P(7,2)", 180, findings_sweep},
      {"thm-2.2", "Bagging certificates on optimal IDFs of P(n,1)", 120, bagging},
      {"classification", "Italian-graph predicate and gamma_I vs gamma_r2", 180, classification},
  };
  return checks;
}

std::vector<const CheckSpec*> select_checks(const std::string& prefix) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : reproduction_checks()) {
    if (c.id.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
  }
  return out;
}

CheckOutcome run_check(const CheckSpec& spec, const ReproduceOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out = spec.run(opts);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.id = spec.id;
  out.title = spec.title;
  out.budget_seconds = spec.budget_seconds;
  return out;
}

}  // namespace gpid
