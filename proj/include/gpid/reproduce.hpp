#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gpid {

struct CheckOutcome {
  std::string id;
  std::string title;
  bool passed = true;
  double seconds = 0;
  /// Wall-clock limit the check is expected to finish under.
  double budget_seconds = 0;
  /// One line per instance examined.
  std::vector<std::string> rows;
  /// Audit findings that do not fail the check.
  std::vector<std::string> notes;
};

struct ReproduceOptions {
  std::optional<int> n_max;
  std::optional<int> k_max;
};

struct CheckSpec {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<CheckOutcome(const ReproduceOptions&)> run;
};

/// Every desk-scale reproduction check, in canonical order.
const std::vector<CheckSpec>& reproduction_checks();

/// Checks whose id starts with `prefix` (all of them when empty).
std::vector<const CheckSpec*> select_checks(const std::string& prefix);

/// Runs a check and fills in the timing.
CheckOutcome run_check(const CheckSpec& spec, const ReproduceOptions& opts);

}  // namespace gpid
