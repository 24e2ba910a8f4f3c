#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpid/graph.hpp"

namespace gpid {

/// Vertex -> {0,1,2} assignment on P(n,k), stored by vertex id.
class Labeling {
 public:
  Labeling(int n, int k);
  Labeling(int n, int k, std::vector<std::uint8_t> values);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(values_.size()); }

  std::uint8_t operator[](Vertex v) const { return values_[v]; }
  void set(Vertex v, std::uint8_t label);
  std::span<const std::uint8_t> values() const { return values_; }

  int weight() const;
  /// V_0, V_1 or V_2.
  std::vector<Vertex> level_set(int label) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> values_;
};

/// Vertex -> subset of {1,2}, bit 0 = color 1, bit 1 = color 2.
class RainbowLabeling {
 public:
  static constexpr std::uint8_t kEmpty = 0;
  static constexpr std::uint8_t kOne = 1;
  static constexpr std::uint8_t kTwo = 2;
  static constexpr std::uint8_t kBoth = 3;

  RainbowLabeling(int n, int k);
  RainbowLabeling(int n, int k, std::vector<std::uint8_t> masks);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(masks_.size()); }
  std::uint8_t operator[](Vertex v) const { return masks_[v]; }
  void set(Vertex v, std::uint8_t mask);
  std::span<const std::uint8_t> masks() const { return masks_; }

  /// Sum of |f(v)|.
  int weight() const;

  friend bool operator==(const RainbowLabeling&, const RainbowLabeling&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> masks_;
};

struct Violation {
  Vertex vertex;
  /// Neighbor label sum (IDF), neighbor color union mask (2RDF), or number of
  /// dominators in the closed neighborhood (dominating set).
  int neighborhood;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

struct ColumnWeight {
  int index;
  int weight;

  friend bool operator==(const ColumnWeight&, const ColumnWeight&) = default;
};

struct EdgeClasses {
  std::vector<std::pair<Vertex, Vertex>> e11;
  std::vector<std::pair<Vertex, Vertex>> e12;
};

int weight(const Labeling& f);

ValidationReport validate_idf(const PetersenGraph& g, const Labeling& f);
ValidationReport validate_2rdf(const PetersenGraph& g, const RainbowLabeling& f);
ValidationReport validate_dominating(const PetersenGraph& g, std::span<const Vertex> set);

/// g(v) = |f(v)|. Throws NotA2RDF when f is not a valid 2RDF.
Labeling rainbow_to_idf(const PetersenGraph& g, const RainbowLabeling& f);

std::vector<ColumnWeight> column_weights(const Labeling& f);
/// Column i of the result holds column (i - shift) mod n of f.
Labeling rotate_columns(const Labeling& f, int shift);
EdgeClasses edge_classes(const PetersenGraph& g, const Labeling& f);

/// Two-row display: top row outer vertices, bottom row inner, "a b c / d e f".
std::string render_matrix(const Labeling& f);
/// Accepts rows separated by '/' or a newline. Throws FormatError.
Labeling parse_matrix(std::string_view text, int n, int k);

/// Mask rendered as "0", "1", "2" or "12".
std::string rainbow_label_string(std::uint8_t mask);
std::uint8_t parse_rainbow_label(std::string_view s);

}  // namespace gpid
