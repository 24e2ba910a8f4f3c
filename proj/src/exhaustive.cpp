#include <limits>
#include <string>

#include <omp.h>

#include "gpid/parallel.hpp"
#include "gpid/solver.hpp"

namespace gpid {

namespace {

struct ChunkBest {
  int weight = std::numeric_limits<int>::max();
  Witness labels;
  std::uint64_t visited = 0;
};

// Enumerates every labeling whose first `prefix.size()` labels equal
// `prefix`, in lexicographic order, keeping the first one of minimum weight.
template <typename Rule>
ChunkBest enumerate_chunk(const PetersenGraph& g, const Witness& prefix) {
  const int size = g.vertex_count();
  const int fixed = static_cast<int>(prefix.size());
  std::vector<int> nb(3 * size);
  for (Vertex v = 0; v < size; ++v) {
    const auto adj = g.neighbors(v);
    for (int j = 0; j < 3; ++j) nb[3 * v + j] = adj[j];
  }

  Witness d(size, 0);
  int w = 0;
  for (int i = 0; i < fixed; ++i) {
    d[i] = prefix[i];
    w += Rule::weight(d[i]);
  }

  ChunkBest best;
  for (;;) {
    ++best.visited;
    if (w < best.weight) {
      bool ok = true;
      for (int v = 0; v < size && ok; ++v) {
        if (d[v] != 0) continue;
        int p = 0;
        p = Rule::combine(p, d[nb[3 * v]]);
        p = Rule::combine(p, d[nb[3 * v + 1]]);
        p = Rule::combine(p, d[nb[3 * v + 2]]);
        ok = Rule::satisfied(0, p);
      }
      if (ok) {
        best.weight = w;
        best.labels = d;
      }
    }
    int pos = size - 1;
    while (pos >= fixed && d[pos] == Rule::labels - 1) {
      w -= Rule::weight(d[pos]);
      d[pos] = 0;
      --pos;
    }
    if (pos < fixed) break;
    w -= Rule::weight(d[pos]);
    ++d[pos];
    w += Rule::weight(d[pos]);
  }
  return best;
}

void check_size(const PetersenGraph& g, Invariant kind) {
  const int limit =
      kind == Invariant::rainbow2 ? kExhaustiveMaxVerticesRainbow : kExhaustiveMaxVertices;
  if (g.vertex_count() > limit) {
    throw BudgetExceeded("exhaustive " + to_string(kind) + " search limited to " +
                         std::to_string(limit) + " vertices, P(" + std::to_string(g.n()) + "," +
                         std::to_string(g.k()) + ") has " + std::to_string(g.vertex_count()));
  }
}

SolveResult to_result(const PetersenGraph& g, Invariant kind, ChunkBest best) {
  return SolveResult{kind, g.n(), g.k(), best.weight, std::move(best.labels), Method::exhaustive,
                     best.visited};
}

template <typename Rule>
SolveResult exhaustive_parallel(const PetersenGraph& g) {
  // Prefix length fixed by the instance only, so the chunking (and result)
  // does not depend on the worker count.
  int prefix_len = 0;
  long long chunks = 1;
  while (prefix_len < g.vertex_count() - 1 && chunks < 243) {
    chunks *= Rule::labels;
    ++prefix_len;
  }
  std::vector<ChunkBest> results(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (long long c = 0; c < chunks; ++c) {
    Witness prefix(prefix_len);
    long long rest = c;
    for (int i = prefix_len - 1; i >= 0; --i) {
      prefix[i] = static_cast<std::uint8_t>(rest % Rule::labels);
      rest /= Rule::labels;
    }
    results[c] = enumerate_chunk<Rule>(g, prefix);
  }
  ChunkBest best;
  std::uint64_t visited = 0;
  for (auto& r : results) {
    visited += r.visited;
    if (r.weight < best.weight) best = std::move(r);
  }
  best.visited = visited;
  return to_result(g, Rule::kind, std::move(best));
}

}  // namespace

SolveResult solve_exhaustive_serial(const PetersenGraph& g, Invariant kind) {
  check_size(g, kind);
  return with_rule(kind, [&](auto rule) {
    using Rule = decltype(rule);
    return to_result(g, kind, enumerate_chunk<Rule>(g, {}));
  });
}

SolveResult solve_exhaustive(const PetersenGraph& g, Invariant kind) {
  check_size(g, kind);
  return with_rule(kind, [&](auto rule) { return exhaustive_parallel<decltype(rule)>(g); });
}

}  // namespace gpid
