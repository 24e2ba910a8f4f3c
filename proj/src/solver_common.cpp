#include <bit>

#include "gpid/solver.hpp"

namespace gpid {

std::string to_string(Invariant kind) {
  switch (kind) {
    case Invariant::domination: return "domination";
    case Invariant::italian: return "italian";
    case Invariant::rainbow2: return "rainbow2";
  }
  return "?";
}

Invariant parse_invariant(std::string_view s) {
  if (s == "domination" || s == "gamma") return Invariant::domination;
  if (s == "italian" || s == "gamma_I") return Invariant::italian;
  if (s == "rainbow2" || s == "rainbow" || s == "gamma_r2") return Invariant::rainbow2;
  throw InvalidParameters("unknown invariant '" + std::string(s) + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::dp: return "dp";
    case Method::branch_and_bound: return "branch_and_bound";
  }
  return "?";
}

int witness_weight(Invariant kind, std::span<const std::uint8_t> witness) {
  return with_rule(kind, [&](auto rule) {
    int w = 0;
    for (auto l : witness) w += decltype(rule)::weight(l);
    return w;
  });
}

Labeling witness_as_labeling(const PetersenGraph& g, std::span<const std::uint8_t> witness) {
  return Labeling(g.n(), g.k(), Witness(witness.begin(), witness.end()));
}

RainbowLabeling witness_as_rainbow(const PetersenGraph& g, std::span<const std::uint8_t> witness) {
  return RainbowLabeling(g.n(), g.k(), Witness(witness.begin(), witness.end()));
}

std::vector<Vertex> witness_as_set(std::span<const std::uint8_t> witness) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(witness.size()); ++v) {
    if (witness[v] != 0) out.push_back(v);
  }
  return out;
}

ValidationReport validate_witness(const PetersenGraph& g, Invariant kind,
                                  std::span<const std::uint8_t> witness) {
  if (static_cast<int>(witness.size()) != g.vertex_count()) {
    throw InvalidParameters("witness length does not match the graph");
  }
  switch (kind) {
    case Invariant::italian: return validate_idf(g, witness_as_labeling(g, witness));
    case Invariant::rainbow2: return validate_2rdf(g, witness_as_rainbow(g, witness));
    case Invariant::domination: {
      for (auto l : witness) {
        if (l > 1) throw InvalidParameters("domination witness must be 0/1");
      }
      const auto set = witness_as_set(witness);
      return validate_dominating(g, set);
    }
  }
  throw InvalidParameters("unknown invariant");
}

int degree_lower_bound(const PetersenGraph& g) {
  // 2|V| / (Delta + 2) with |V| = 2n, Delta = 3.
  const int num = 2 * g.vertex_count();
  const int den = PetersenGraph::max_degree() + 2;
  return (num + den - 1) / den;
}

int invariant_lower_bound(const PetersenGraph& g, Invariant kind) {
  if (kind == Invariant::domination) {
    const int closed = PetersenGraph::max_degree() + 1;
    return (g.vertex_count() + closed - 1) / closed;
  }
  return degree_lower_bound(g);
}

}  // namespace gpid
