#include <algorithm>
#include <limits>
#include <vector>

#include <omp.h>

#include "gpid/parallel.hpp"
#include "gpid/solver.hpp"

namespace gpid {

namespace {

constexpr int kUnassigned = -1;

template <typename Rule>
constexpr int successor_count(int label) {
  if constexpr (Rule::kind == Invariant::rainbow2) {
    return label == 0 ? 2 : (label == 3 ? 0 : 1);
  } else {
    return label + 1 < Rule::labels ? 1 : 0;
  }
}

// Labels reachable from `label` by adding one unit of weight.
template <typename Rule>
constexpr int successor(int label, int which) {
  if constexpr (Rule::kind == Invariant::rainbow2) {
    return label == 0 ? (which == 0 ? 1 : 2) : 3;
  } else {
    return label + 1;
  }
}

template <typename Rule>
int vertex_deficiency(const PetersenGraph& g, const Witness& f, Vertex v) {
  if (f[v] != 0) return 0;
  int p = 0;
  for (Vertex u : g.neighbors(v)) p = Rule::combine(p, f[u]);
  return Rule::deficiency(p);
}

template <typename Rule>
int local_deficiency(const PetersenGraph& g, const Witness& f, Vertex v) {
  int d = vertex_deficiency<Rule>(g, f, v);
  for (Vertex u : g.neighbors(v)) d += vertex_deficiency<Rule>(g, f, u);
  return d;
}

template <typename Rule>
Witness greedy_impl(const PetersenGraph& g, Witness f) {
  const int size = g.vertex_count();
  if (f.empty()) f.assign(size, 0);
  for (;;) {
    int total = 0;
    for (Vertex v = 0; v < size; ++v) total += vertex_deficiency<Rule>(g, f, v);
    if (total == 0) break;
    int best_gain = 0;
    Vertex best_v = -1;
    int best_label = 0;
    for (Vertex v = 0; v < size; ++v) {
      const int before = local_deficiency<Rule>(g, f, v);
      const int old = f[v];
      for (int s = 0; s < successor_count<Rule>(old); ++s) {
        f[v] = static_cast<std::uint8_t>(successor<Rule>(old, s));
        const int gain = before - local_deficiency<Rule>(g, f, v);
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
          best_label = f[v];
        }
      }
      f[v] = static_cast<std::uint8_t>(old);
    }
    f[best_v] = static_cast<std::uint8_t>(best_label);
  }
  // Lower labels while the labeling stays valid.
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < size; ++v) {
      const int old = f[v];
      int chosen = old;
      for (int l = 0; l < Rule::labels; ++l) {
        if (Rule::weight(l) >= Rule::weight(chosen)) continue;
        f[v] = static_cast<std::uint8_t>(l);
        if (local_deficiency<Rule>(g, f, v) == 0) chosen = l;
      }
      f[v] = static_cast<std::uint8_t>(chosen);
      changed = changed || chosen != old;
    }
  }
  return f;
}

struct SearchOutcome {
  int best = std::numeric_limits<int>::max();
  Witness witness;
  std::uint64_t nodes = 0;
  bool complete = true;
  int frontier_lb = std::numeric_limits<int>::max();
};

template <typename Rule>
class Search {
 public:
  Search(const PetersenGraph& g, int global_lb, int incumbent, std::uint64_t budget)
      : g_(g),
        size_(g.vertex_count()),
        global_lb_(global_lb),
        budget_(budget),
        label_(size_, kUnassigned),
        partial_(size_, 0),
        open_(size_, 0) {
    out_.best = incumbent;
  }

  // Assigns a fixed prefix; false if it already violates a completed vertex.
  bool assign_prefix(const Witness& prefix) {
    for (int v = 0; v < static_cast<int>(prefix.size()); ++v) {
      if (!assign(v, prefix[v])) return false;
    }
    return true;
  }

  SearchOutcome run(int depth) {
    descend(depth);
    return out_;
  }

 private:
  struct Saved {
    Vertex v;
    int partial;
  };

  int bound() const {
    return std::max(global_lb_, weight_ + (deficit_ + 2) / 3);
  }

  bool assign(Vertex v, int l) {
    label_[v] = l;
    weight_ += Rule::weight(l);
    int p = 0;
    int open = 0;
    bool ok = true;
    for (Vertex u : g_.neighbors(v)) {
      if (label_[u] == kUnassigned) {
        ++open;
        continue;
      }
      p = Rule::combine(p, label_[u]);
      if (label_[u] == 0) {
        trail_.push_back({u, partial_[u]});
        deficit_ -= Rule::deficiency(partial_[u]);
        partial_[u] = Rule::combine(partial_[u], l);
        --open_[u];
        if (open_[u] == 0) {
          ok = ok && Rule::satisfied(0, partial_[u]);
        } else {
          deficit_ += Rule::deficiency(partial_[u]);
        }
      } else {
        trail_.push_back({u, partial_[u]});
        --open_[u];
      }
    }
    partial_[v] = p;
    open_[v] = open;
    if (l == 0) {
      if (open == 0) {
        ok = ok && Rule::satisfied(0, p);
      } else {
        deficit_ += Rule::deficiency(p);
      }
    }
    return ok;
  }

  void unassign(Vertex v, std::size_t trail_mark) {
    const int l = label_[v];
    if (l == 0 && open_[v] > 0) deficit_ -= Rule::deficiency(partial_[v]);
    while (trail_.size() > trail_mark) {
      const Saved s = trail_.back();
      trail_.pop_back();
      if (label_[s.v] == 0) {
        if (open_[s.v] > 0) deficit_ -= Rule::deficiency(partial_[s.v]);
        deficit_ += Rule::deficiency(s.partial);
      }
      partial_[s.v] = s.partial;
      ++open_[s.v];
    }
    weight_ -= Rule::weight(l);
    label_[v] = kUnassigned;
    partial_[v] = 0;
    open_[v] = 0;
  }

  // Returns false when the node budget ran out somewhere below.
  bool descend(int depth) {
    const int lb = bound();
    if (lb >= out_.best) return true;
    if (depth == size_) {
      out_.best = weight_;
      out_.witness.assign(label_.begin(), label_.end());
      return true;
    }
    for (int l = 0; l < Rule::labels; ++l) {
      if (out_.nodes >= budget_) {
        out_.complete = false;
        out_.frontier_lb = std::min(out_.frontier_lb, lb);
        return false;
      }
      ++out_.nodes;
      const std::size_t mark = trail_.size();
      const bool ok = assign(depth, l);
      bool finished = true;
      if (ok) finished = descend(depth + 1);
      unassign(depth, mark);
      if (!finished) {
        if (l + 1 < Rule::labels) out_.frontier_lb = std::min(out_.frontier_lb, lb);
        return false;
      }
    }
    return true;
  }

  const PetersenGraph& g_;
  int size_;
  int global_lb_;
  std::uint64_t budget_;
  std::vector<int> label_;
  std::vector<int> partial_;
  std::vector<int> open_;
  std::vector<Saved> trail_;
  int weight_ = 0;
  int deficit_ = 0;
  SearchOutcome out_;
};

template <typename Rule>
Witness initial_incumbent(const PetersenGraph& g, const std::optional<Witness>& seed) {
  Witness best = greedy_impl<Rule>(g, {});
  if (seed) {
    if (static_cast<int>(seed->size()) != g.vertex_count()) {
      throw InvalidParameters("seed length does not match the graph");
    }
    Witness repaired = greedy_impl<Rule>(g, *seed);
    if (witness_weight(Rule::kind, repaired) < witness_weight(Rule::kind, best)) {
      best = std::move(repaired);
    }
  }
  return best;
}

template <typename Rule>
BnbOutcome finish(const PetersenGraph& g, int lo, Witness incumbent, std::uint64_t nodes,
                  bool complete) {
  const int hi = witness_weight(Rule::kind, incumbent);
  if (complete || lo >= hi) {
    return SolveResult{Rule::kind, g.n(), g.k(), hi, std::move(incumbent),
                       Method::branch_and_bound, nodes};
  }
  return BoundsOnly{lo, hi, std::move(incumbent), nodes};
}

template <typename Rule>
BnbOutcome bnb_serial(const PetersenGraph& g, std::uint64_t budget,
                      const std::optional<Witness>& seed) {
  const int global_lb = invariant_lower_bound(g, Rule::kind);
  Witness incumbent = initial_incumbent<Rule>(g, seed);
  const int start = witness_weight(Rule::kind, incumbent);
  if (start <= global_lb) return finish<Rule>(g, global_lb, std::move(incumbent), 0, true);

  Search<Rule> search(g, global_lb, start, budget);
  SearchOutcome out = search.run(0);
  if (!out.witness.empty()) incumbent = std::move(out.witness);
  const int hi = witness_weight(Rule::kind, incumbent);
  const int lo = out.complete ? hi : std::max(global_lb, std::min(hi, out.frontier_lb));
  return finish<Rule>(g, lo, std::move(incumbent), out.nodes, out.complete);
}

template <typename Rule>
BnbOutcome bnb_parallel(const PetersenGraph& g, std::uint64_t budget,
                        const std::optional<Witness>& seed) {
  const int global_lb = invariant_lower_bound(g, Rule::kind);
  Witness incumbent = initial_incumbent<Rule>(g, seed);
  const int start = witness_weight(Rule::kind, incumbent);
  if (start <= global_lb) return finish<Rule>(g, global_lb, std::move(incumbent), 0, true);

  // Subtree roots: every labeling of the first few vertices. Fixed by the
  // instance, so results do not depend on the worker count.
  int depth = 0;
  int tasks = 1;
  while (depth < g.vertex_count() && tasks < 64) {
    tasks *= Rule::labels;
    ++depth;
  }
  const std::uint64_t share = budget / tasks;
  std::vector<SearchOutcome> results(tasks);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int t = 0; t < tasks; ++t) {
    Witness prefix(depth);
    int rest = t;
    for (int i = depth - 1; i >= 0; --i) {
      prefix[i] = static_cast<std::uint8_t>(rest % Rule::labels);
      rest /= Rule::labels;
    }
    Search<Rule> search(g, global_lb, start, share);
    if (search.assign_prefix(prefix)) {
      results[t] = search.run(depth);
    } else {
      results[t].best = start;
    }
  }

  std::uint64_t nodes = 0;
  bool complete = true;
  int frontier = std::numeric_limits<int>::max();
  int best = start;
  for (auto& r : results) {
    nodes += r.nodes;
    complete = complete && r.complete;
    frontier = std::min(frontier, r.frontier_lb);
    if (!r.witness.empty() && r.best < best) {
      best = r.best;
      incumbent = std::move(r.witness);
    }
  }
  const int lo = complete ? best : std::max(global_lb, std::min(best, frontier));
  return finish<Rule>(g, lo, std::move(incumbent), nodes, complete);
}

}  // namespace

Witness greedy_incumbent(const PetersenGraph& g, Invariant kind, Witness start) {
  if (!start.empty() && static_cast<int>(start.size()) != g.vertex_count()) {
    throw InvalidParameters("start labeling length does not match the graph");
  }
  return with_rule(kind, [&](auto rule) { return greedy_impl<decltype(rule)>(g, std::move(start)); });
}

BnbOutcome solve_branch_and_bound_serial(const PetersenGraph& g, Invariant kind,
                                         std::uint64_t budget, std::optional<Witness> seed) {
  return with_rule(kind, [&](auto rule) { return bnb_serial<decltype(rule)>(g, budget, seed); });
}

BnbOutcome solve_branch_and_bound(const PetersenGraph& g, Invariant kind, std::uint64_t budget,
                                  std::optional<Witness> seed) {
  return with_rule(kind, [&](auto rule) { return bnb_parallel<decltype(rule)>(g, budget, seed); });
}

}  // namespace gpid
