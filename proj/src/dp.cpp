#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <omp.h>

#include "gpid/parallel.hpp"
#include "gpid/solver.hpp"

namespace gpid {

namespace {

constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();

// Window layout: slot 0 holds the newest outer vertex o_i, slots 1..k the
// inner vertices u_{i-k+1} .. u_i (slot 1 oldest). Each slot is a code for
// (label, partial); the partial is only tracked for label 0.
template <typename Rule>
class ProfileTable {
 public:
  static constexpr int codes = Rule::partials + Rule::labels - 1;

  ProfileTable(int k) : k_(k) {
    states_ = 1;
    for (int j = 0; j <= k; ++j) states_ *= codes;
    next_.assign(static_cast<std::size_t>(states_) * Rule::labels * Rule::labels, -1);
    for (int s = 0; s < states_; ++s) {
      for (int a = 0; a < Rule::labels; ++a) {
        for (int b = 0; b < Rule::labels; ++b) next_[index(s, a, b)] = step(s, a, b);
      }
    }
  }

  int states() const { return states_; }
  int next(int s, int a, int b) const { return next_[index(s, a, b)]; }

 private:
  static int label_of(int code) { return code < Rule::partials ? 0 : code - Rule::partials + 1; }
  static int partial_of(int code) { return code < Rule::partials ? code : 0; }
  static int code_of(int label, int partial) {
    return label == 0 ? partial : Rule::partials + label - 1;
  }

  std::size_t index(int s, int a, int b) const {
    return (static_cast<std::size_t>(s) * Rule::labels + a) * Rule::labels + b;
  }

  // Adds column i+1 with outer label a and inner label b to the window after
  // column i. The outer o_i and the oldest inner u_{i+1-k} see their last
  // neighbor here and must be satisfied.
  int step(int s, int a, int b) const {
    std::vector<int> slot(k_ + 1);
    int rest = s;
    for (int j = 0; j <= k_; ++j) {
      slot[j] = rest % codes;
      rest /= codes;
    }
    const int outer_label = label_of(slot[0]);
    const int oldest_label = label_of(slot[1]);
    if (outer_label == 0 && !Rule::satisfied(0, Rule::combine(partial_of(slot[0]), a))) return -1;
    if (oldest_label == 0 && !Rule::satisfied(0, Rule::combine(partial_of(slot[1]), b))) return -1;

    const int new_outer =
        a == 0 ? code_of(0, Rule::combine(Rule::combine(0, outer_label), b)) : code_of(a, 0);
    const int new_inner =
        b == 0 ? code_of(0, Rule::combine(Rule::combine(0, oldest_label), a)) : code_of(b, 0);

    std::vector<int> out(k_ + 1);
    out[0] = new_outer;
    for (int j = 1; j < k_; ++j) out[j] = slot[j + 1];
    out[k_] = new_inner;
    int t = 0;
    for (int j = k_; j >= 0; --j) t = t * codes + out[j];
    return t;
  }

  int k_;
  int states_ = 0;
  std::vector<int> next_;
};

// Cost-to-go table for one seam: cost[i][s] is the least weight of columns
// i..n-1 that leads from window s (after column i-1) back to the seam.
template <typename Rule>
struct SeamRun {
  std::vector<std::uint16_t> cost;
  std::uint64_t expanded = 0;

  void run(const ProfileTable<Rule>& table, int n, int seam) {
    const int states = table.states();
    cost.assign(static_cast<std::size_t>(n + 1) * states, kInf);
    cost[static_cast<std::size_t>(n) * states + seam] = 0;
    expanded = 0;
    for (int i = n - 1; i >= 0; --i) {
      const std::uint16_t* later = &cost[static_cast<std::size_t>(i + 1) * states];
      std::uint16_t* here = &cost[static_cast<std::size_t>(i) * states];
      for (int s = 0; s < states; ++s) {
        int best = kInf;
        for (int a = 0; a < Rule::labels; ++a) {
          for (int b = 0; b < Rule::labels; ++b) {
            const int t = table.next(s, a, b);
            if (t < 0 || later[t] == kInf) continue;
            best = std::min(best, Rule::weight(a) + Rule::weight(b) + later[t]);
          }
        }
        if (best != kInf) {
          here[s] = static_cast<std::uint16_t>(best);
          ++expanded;
        }
      }
    }
  }

  int optimum(int seam) const { return cost[seam]; }

  // Lexicographically smallest optimal labeling through this seam.
  Witness witness(const ProfileTable<Rule>& table, int n, int seam) const {
    const int states = table.states();
    Witness labels(2 * n);
    int cur = seam;
    for (int i = 0; i < n; ++i) {
      const int target = cost[static_cast<std::size_t>(i) * states + cur];
      const std::uint16_t* later = &cost[static_cast<std::size_t>(i + 1) * states];
      bool found = false;
      for (int a = 0; a < Rule::labels && !found; ++a) {
        for (int b = 0; b < Rule::labels && !found; ++b) {
          const int t = table.next(cur, a, b);
          if (t < 0 || later[t] == kInf) continue;
          if (Rule::weight(a) + Rule::weight(b) + later[t] == target) {
            labels[2 * i] = static_cast<std::uint8_t>(a);
            labels[2 * i + 1] = static_cast<std::uint8_t>(b);
            cur = t;
            found = true;
          }
        }
      }
    }
    return labels;
  }
};

void check_dp_params(int n, int k) {
  if (!admissible(n, k) || k > 3) {
    throw InvalidParameters("solve_dp needs n >= 3, 1 <= k <= 3 and 2k < n (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

template <typename Rule>
SolveResult dp_impl(int n, int k, const DpOptions& opts, bool parallel) {
  const ProfileTable<Rule> table(k);
  const int states = table.states();
  const std::uint64_t work = static_cast<std::uint64_t>(states) * states * n;
  if (work > opts.max_work) {
    throw BudgetExceeded("profile DP for P(" + std::to_string(n) + "," + std::to_string(k) +
                         ") needs " + std::to_string(work) + " state expansions, cap is " +
                         std::to_string(opts.max_work));
  }

  std::vector<int> per_seam(states, kInf);
  std::vector<std::uint64_t> expanded(states, 0);
  if (parallel) {
#pragma omp parallel num_threads(worker_count())
    {
      SeamRun<Rule> run;
#pragma omp for schedule(dynamic)
      for (int seam = 0; seam < states; ++seam) {
        run.run(table, n, seam);
        per_seam[seam] = run.optimum(seam);
        expanded[seam] = run.expanded;
      }
    }
  } else {
    SeamRun<Rule> run;
    for (int seam = 0; seam < states; ++seam) {
      run.run(table, n, seam);
      per_seam[seam] = run.optimum(seam);
      expanded[seam] = run.expanded;
    }
  }

  const int optimum = *std::min_element(per_seam.begin(), per_seam.end());
  std::uint64_t explored = 0;
  for (auto e : expanded) explored += e;

  Witness best;
  SeamRun<Rule> run;
  for (int seam = 0; seam < states; ++seam) {
    if (per_seam[seam] != optimum) continue;
    run.run(table, n, seam);
    Witness w = run.witness(table, n, seam);
    if (best.empty() || w < best) best = std::move(w);
  }
  return SolveResult{Rule::kind, n, k, optimum, std::move(best), Method::dp, explored};
}

}  // namespace

SolveResult solve_dp(int n, int k, Invariant kind, DpOptions opts) {
  check_dp_params(n, k);
  return with_rule(kind, [&](auto rule) { return dp_impl<decltype(rule)>(n, k, opts, true); });
}

SolveResult solve_dp_serial(int n, int k, Invariant kind, DpOptions opts) {
  check_dp_params(n, k);
  return with_rule(kind, [&](auto rule) { return dp_impl<decltype(rule)>(n, k, opts, false); });
}

}  // namespace gpid
