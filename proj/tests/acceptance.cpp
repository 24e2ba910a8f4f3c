// Acceptance gate: every reproduction criterion with its pinned tolerance
// (exact integer equality, zero violations) and wall-clock budget.

#include <cstdio>
#include <string>

#include "gpid/reproduce.hpp"

int main() {
  const auto& checks = gpid::reproduction_checks();
  int failed = 0;
  int number = 0;
  for (const auto& spec : checks) {
    ++number;
    const auto out = gpid::run_check(spec, {});
    const bool in_time = out.seconds <= out.budget_seconds;
    const bool ok = out.passed && in_time;
    failed += !ok;
    std::printf("[%s] criterion %2d  %-18s %-55s %8.2f s / %5.0f s%s\n", ok ? "PASS" : "FAIL", number,
                out.id.c_str(), out.title.c_str(), out.seconds, out.budget_seconds,
                in_time ? "" : "  over budget");
    for (const auto& row : out.rows) {
      if (row.find("FAIL") != std::string::npos) std::printf("      %s\n", row.c_str());
    }
    for (const auto& note : out.notes) std::printf("      note: %s\n", note.c_str());
  }
  std::printf("%d/%d criteria passed\n", number - failed, number);
  return failed == 0 ? 0 : 1;
}
