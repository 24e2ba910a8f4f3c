#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gpid/errors.hpp"

namespace gpid {

using Vertex = int;

/// Two vertices of column i: the outer v_{2i} and the inner v_{2i+1}.
struct ColumnView {
  int index = 0;
  Vertex outer = 0;
  Vertex inner = 0;

  friend bool operator==(const ColumnView&, const ColumnView&) = default;
};

/// Generalized Petersen graph P(n,k).
///
/// Vertex 2i is the i-th vertex of the outer n-cycle, vertex 2i+1 the inner
/// vertex joined to it by a spoke. Inner vertices are joined to the inner
/// vertices k columns away. Neighbor lists are stored ascending.
class PetersenGraph {
 public:
  PetersenGraph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int vertex_count() const { return 2 * n_; }
  int edge_count() const { return 3 * n_; }
  static constexpr int max_degree() { return 3; }

  std::span<const Vertex, 3> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  ColumnView column(int i) const;
  static int column_of(Vertex v) { return v / 2; }
  static bool is_outer(Vertex v) { return v % 2 == 0; }

  /// All 3n edges as (u, v) with u < v, sorted ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const PetersenGraph&, const PetersenGraph&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::array<Vertex, 3>> adjacency_;
};

/// Throws InvalidParameters unless n >= 3, k >= 1 and 2k < n.
PetersenGraph build_petersen(int n, int k);

bool admissible(int n, int k);

/// Edge list, one "u v" pair per line in ascending order.
void write_edge_list(std::ostream& os, const PetersenGraph& g);

}  // namespace gpid
