// Serial reference kernels against their OpenMP counterparts.
// Usage: gpid_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "gpid/parallel.hpp"
#include "gpid/solver.hpp"

using namespace gpid;

namespace {

double seconds(const std::function<int()>& run, int repeats, int& result) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    result = run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

int optimum_of(const BnbOutcome& o) {
  return std::holds_alternative<SolveResult>(o) ? std::get<SolveResult>(o).optimum : -std::get<BoundsOnly>(o).hi;
}

void row(const std::string& name, const std::function<int()>& serial, const std::function<int()>& parallel,
         int repeats) {
  int a = 0;
  int b = 0;
  const double ts = seconds(serial, repeats, a);
  const double tp = seconds(parallel, repeats, b);
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << ts << std::setw(10) << tp << std::setw(8) << std::setprecision(2)
            << ts / tp << "x" << (a == b ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::cout << "workers " << worker_count() << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "omp" << std::setw(9) << "speedup" << '\n';

  row("dp P(40,3) italian", [] { return solve_dp_serial(40, 3, Invariant::italian).optimum; },
      [] { return solve_dp(40, 3, Invariant::italian).optimum; }, repeats);
  row("dp P(20,3) rainbow2", [] { return solve_dp_serial(20, 3, Invariant::rainbow2).optimum; },
      [] { return solve_dp(20, 3, Invariant::rainbow2).optimum; }, repeats);

  const PetersenGraph p8(8, 3);
  row("exhaustive P(8,3) italian", [&] { return solve_exhaustive_serial(p8, Invariant::italian).optimum; },
      [&] { return solve_exhaustive(p8, Invariant::italian).optimum; }, repeats);
  const PetersenGraph p6(6, 2);
  row("exhaustive P(6,2) rainbow2", [&] { return solve_exhaustive_serial(p6, Invariant::rainbow2).optimum; },
      [&] { return solve_exhaustive(p6, Invariant::rainbow2).optimum; }, repeats);

  const PetersenGraph p16(16, 5);
  row("bnb P(16,5) italian", [&] { return optimum_of(solve_branch_and_bound_serial(p16, Invariant::italian, 5'000'000)); },
      [&] { return optimum_of(solve_branch_and_bound(p16, Invariant::italian, 5'000'000)); }, repeats);
  return 0;
}
