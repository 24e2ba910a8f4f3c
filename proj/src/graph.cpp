#include "gpid/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace gpid {

bool admissible(int n, int k) { return n >= 3 && k >= 1 && 2 * k < n; }

PetersenGraph::PetersenGraph(int n, int k) : n_(n), k_(k) {
  if (!admissible(n, k)) {
    throw InvalidParameters("P(" + std::to_string(n) + "," + std::to_string(k) +
                            ") requires n >= 3, k >= 1 and 2k < n");
  }
  adjacency_.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    const int prev = (i + n - 1) % n;
    const int fwd = (i + k) % n;
    const int back = (i + n - k) % n;
    adjacency_[2 * i] = {2 * next, 2 * prev, 2 * i + 1};
    adjacency_[2 * i + 1] = {2 * fwd + 1, 2 * back + 1, 2 * i};
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::span<const Vertex, 3> PetersenGraph::neighbors(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw OutOfRange("vertex " + std::to_string(v) + " not in P(" +
                     std::to_string(n_) + "," + std::to_string(k_) + ")");
  }
  return std::span<const Vertex, 3>(adjacency_[v]);
}

bool PetersenGraph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

ColumnView PetersenGraph::column(int i) const {
  if (i < 0 || i >= n_) {
    throw OutOfRange("column " + std::to_string(i) + " out of range");
  }
  return {i, 2 * i, 2 * i + 1};
}

std::vector<std::pair<Vertex, Vertex>> PetersenGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

PetersenGraph build_petersen(int n, int k) { return PetersenGraph(n, k); }

void write_edge_list(std::ostream& os, const PetersenGraph& g) {
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace gpid
