#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gpid/graph.hpp"
#include "gpid/labeling.hpp"
#include "gpid/rules.hpp"

namespace gpid {

enum class Method { exhaustive, dp, branch_and_bound };

std::string to_string(Method m);

/// Per-vertex labels in the kind's own alphabet: 0/1 membership for
/// domination, 0..2 for italian, color masks 0..3 for rainbow2.
using Witness = std::vector<std::uint8_t>;

struct SolveResult {
  Invariant kind = Invariant::italian;
  int n = 0;
  int k = 0;
  int optimum = 0;
  Witness witness;
  Method method = Method::exhaustive;
  std::uint64_t explored = 0;
};

struct BoundsOnly {
  int lo = 0;
  int hi = 0;
  Witness incumbent;
  std::uint64_t explored = 0;
};

using BnbOutcome = std::variant<SolveResult, BoundsOnly>;

int witness_weight(Invariant kind, std::span<const std::uint8_t> witness);
ValidationReport validate_witness(const PetersenGraph& g, Invariant kind,
                                  std::span<const std::uint8_t> witness);

Labeling witness_as_labeling(const PetersenGraph& g, std::span<const std::uint8_t> witness);
RainbowLabeling witness_as_rainbow(const PetersenGraph& g, std::span<const std::uint8_t> witness);
std::vector<Vertex> witness_as_set(std::span<const std::uint8_t> witness);

/// ceil(2|V|/(Delta+2)) = ceil(4n/5).
int degree_lower_bound(const PetersenGraph& g);
/// Closed-neighborhood counting bound for the given invariant: ceil(n/2) for
/// domination, ceil(4n/5) for italian and rainbow2.
int invariant_lower_bound(const PetersenGraph& g, Invariant kind);

// Exhaustive enumeration in lexicographic order of the label vector; the
// witness is the lexicographically smallest optimum.
inline constexpr int kExhaustiveMaxVertices = 16;
inline constexpr int kExhaustiveMaxVerticesRainbow = 12;

SolveResult solve_exhaustive(const PetersenGraph& g, Invariant kind);
SolveResult solve_exhaustive_serial(const PetersenGraph& g, Invariant kind);

struct DpOptions {
  /// Cap on seam states x columns x window states.
  std::uint64_t max_work = 500'000'000;
};

/// Cyclic profile DP for k <= 3. The window holds the newest outer vertex
/// and the k newest inner vertices with their labels and saturated coverage;
/// the cycle is closed by requiring the final window to equal the seam.
SolveResult solve_dp(int n, int k, Invariant kind, DpOptions opts = {});
SolveResult solve_dp_serial(int n, int k, Invariant kind, DpOptions opts = {});

/// Column-order DFS over labels 0,1,.. with bound pruning. Returns the exact
/// optimum when the search finishes within `budget` tree nodes, otherwise
/// certified bounds. `seed`, when given, is repaired into a valid incumbent.
BnbOutcome solve_branch_and_bound(const PetersenGraph& g, Invariant kind, std::uint64_t budget,
                                  std::optional<Witness> seed = std::nullopt);
BnbOutcome solve_branch_and_bound_serial(const PetersenGraph& g, Invariant kind,
                                         std::uint64_t budget,
                                         std::optional<Witness> seed = std::nullopt);

/// Repairs `start` (all zeros when empty) into a valid labeling by greedy
/// increments, then greedily lowers labels while validity holds.
Witness greedy_incumbent(const PetersenGraph& g, Invariant kind, Witness start = {});

}  // namespace gpid
