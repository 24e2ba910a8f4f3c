#pragma once

#include <cstdint>
#include <vector>

#include "gpid/graph.hpp"
#include "gpid/rules.hpp"

namespace gpid {

/// Calls `visit(labels)` for every valid IDF of weight <= max_weight whose
/// first labels equal `prefix`, in lexicographic order.
template <typename Visitor>
void for_each_idf(const PetersenGraph& g, int max_weight, const std::vector<std::uint8_t>& prefix,
                  Visitor&& visit) {
  using Rule = ItalianRule;
  const int size = g.vertex_count();
  std::vector<std::uint8_t> labels(size, 0);
  std::vector<int> partial(size, 0);
  std::vector<int> open(size, 0);
  int weight = 0;

  // Assigns v (all lower ids already assigned). Returns false if some vertex
  // completed by this assignment is unsatisfied.
  auto assign = [&](Vertex v, int l) {
    labels[v] = static_cast<std::uint8_t>(l);
    weight += l;
    int p = 0;
    int unassigned = 0;
    bool ok = true;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) {
        ++unassigned;
        continue;
      }
      p = Rule::combine(p, labels[u]);
      partial[u] = Rule::combine(partial[u], l);
      if (--open[u] == 0) ok = ok && Rule::satisfied(labels[u], partial[u]);
    }
    partial[v] = p;
    open[v] = unassigned;
    if (unassigned == 0) ok = ok && Rule::satisfied(l, p);
    return ok;
  };
  // Undo needs the pre-assignment partials, so the search keeps copies.
  auto search = [&](auto&& self, Vertex v) -> void {
    if (v == size) {
      visit(labels);
      return;
    }
    const std::vector<int> saved_partial = partial;
    const std::vector<int> saved_open = open;
    const int saved_weight = weight;
    const int first = v < static_cast<Vertex>(prefix.size()) ? prefix[v] : 0;
    const int last = v < static_cast<Vertex>(prefix.size()) ? prefix[v] : Rule::labels - 1;
    for (int l = first; l <= last; ++l) {
      if (saved_weight + l > max_weight) break;
      if (assign(v, l)) self(self, v + 1);
      partial = saved_partial;
      open = saved_open;
      weight = saved_weight;
    }
    labels[v] = 0;
  };
  search(search, 0);
}

}  // namespace gpid
