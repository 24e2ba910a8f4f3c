#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpid/graph.hpp"
#include "gpid/labeling.hpp"

namespace gpid {

// ---- P(n,1): zero-weight column lemma --------------------------------------

struct ColumnLemmaReport {
  int zero_columns = 0;
  /// Zero-weight columns whose two neighboring columns weigh less than 4.
  std::vector<int> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

/// Throws WrongFamily unless k = 1.
ColumnLemmaReport check_column_lemma(const PetersenGraph& g, const Labeling& f);

// ---- P(n,1): bagging certificate -------------------------------------------

struct BagConflict {
  int step;
  int column;
  friend bool operator==(const BagConflict&, const BagConflict&) = default;
};

/// Columns sorted into five bags by the four marking steps; bag 5 holds
/// every column left unmarked.
struct BagCertificate {
  int n = 0;
  int weight = 0;
  std::array<std::vector<int>, 5> bags;
  std::array<int, 5> m{};
  std::vector<std::uint8_t> marks;
  /// Step applications skipped because a target column was already marked.
  std::vector<BagConflict> conflicts;
  std::vector<int> unbagged_zero_columns;
  /// Step-4 columns whose left neighbor weighs less than 3.
  std::vector<int> lemma_failures;

  /// 2m1 + 3m2 + 2m3 + 2m4 + m5, the number of columns accounted for.
  int column_count() const;
  /// 2m1 + 3m2 + 3m3 + 3m4 + m5, the weight the bags certify.
  int weighted_bound() const;
  bool bags_disjoint() const;
  bool consistent() const;
  /// The lower bound the certificate proves: the column count, valid when consistent.
  int implied_bound() const { return column_count(); }
};

/// Throws WrongFamily unless k = 1.
BagCertificate bagging_certificate(const PetersenGraph& g, const Labeling& f);

// ---- P(n,2): discharging ----------------------------------------------------

/// Charges in tenths: g(v) = 2|N(v) & V1| + 5|N(v) & V2| plus 4 for v in V1
/// and 5 for v in V2; r(v) = g(v) - 4.
struct DischargeLedger {
  int n = 0;
  int weight = 0;
  std::vector<int> g_tenths;
  std::vector<int> r_tenths;
  long long g_total_tenths = 0;
  long long r_total_tenths = 0;

  /// g(V) = w(f) and r(V) = w(f) - 0.8n.
  bool identity_holds() const;
  int min_g_tenths() const;
};

/// Throws WrongFamily unless k = 2. Any labeling is accepted.
DischargeLedger discharge(const PetersenGraph& g, const Labeling& f);

struct FindingStatus {
  int id = 0;
  bool hypothesis = false;
  bool conclusion = false;
  /// Lower bound on r(V) the finding asserts, in tenths.
  int threshold_tenths = 0;
  bool violated() const { return hypothesis && !conclusion; }
};

struct FindingsReport {
  long long r_total_tenths = 0;
  std::array<FindingStatus, 8> findings{};
  bool any_violation() const;
  /// Ids of findings whose hypothesis holds.
  std::vector<int> triggered() const;
};

/// Evaluates the eight local findings on a valid IDF of P(n,2). Finding 1 is
/// per vertex (g(v) >= 0.4); findings 2-8 pair a local configuration with a
/// lower bound on r(V). Throws WrongFamily unless k = 2 and
/// InvalidParameters if f is not a valid IDF.
FindingsReport check_findings(const PetersenGraph& g, const Labeling& f);

/// ceil(4n/5) - 4n/5 in tenths.
int threshold_check(int n);

// ---- sweeps -----------------------------------------------------------------

struct SweepRow {
  int n = 0;
  int weight = 0;
  long long r_tenths = 0;
  std::vector<int> findings;
};

struct SweepReport {
  std::string audit;
  int n = 0;
  int k = 0;
  int min_weight = 0;
  int max_weight = 0;
  std::uint64_t labelings = 0;
  std::uint64_t violations = 0;
  /// First violating labelings (matrix text), in enumeration order.
  std::vector<std::string> examples;
  std::map<int, std::uint64_t> by_weight;
  std::vector<SweepRow> rows;
  bool passed() const { return violations == 0; }
};

struct SweepOptions {
  int min_weight = 0;
  /// Negative: no cap (all 2n * 2 weights).
  int max_weight = -1;
  bool collect_rows = false;
  std::size_t max_examples = 5;
};

/// Discharge identity and Finding 1 over every valid IDF of P(n,2) in the
/// weight window.
SweepReport sweep_discharge(int n, const SweepOptions& opts);
/// Findings 2-8 (hypothesis implies conclusion) over every valid IDF of P(n,2).
SweepReport sweep_findings(int n, const SweepOptions& opts);
/// Bagging certificate consistency over every valid IDF of P(n,1) in the window.
SweepReport sweep_bagging(int n, const SweepOptions& opts);
/// Zero-column lemma over every valid IDF of P(n,1) in the window.
SweepReport sweep_column_lemma(int n, const SweepOptions& opts);
/// Random labelings of P(n,2) (valid or not) checked against g(V) = w(f).
SweepReport sweep_discharge_random(int n, int samples, std::uint64_t seed);

}  // namespace gpid
