#include "gpid/labeling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace gpid {

namespace {

void check_same_graph(const PetersenGraph& g, int n, int k) {
  if (g.n() != n || g.k() != k) {
    throw InvalidParameters("labeling belongs to P(" + std::to_string(n) + "," +
                            std::to_string(k) + "), graph is P(" + std::to_string(g.n()) +
                            "," + std::to_string(g.k()) + ")");
  }
}

}  // namespace

Labeling::Labeling(int n, int k) : n_(n), k_(k), values_(2 * std::max(n, 0), 0) {}

Labeling::Labeling(int n, int k, std::vector<std::uint8_t> values)
    : n_(n), k_(k), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != 2 * n) {
    throw InvalidParameters("labeling needs 2n = " + std::to_string(2 * n) + " values, got " +
                            std::to_string(values_.size()));
  }
  for (auto x : values_) {
    if (x > 2) throw InvalidParameters("label " + std::to_string(x) + " not in {0,1,2}");
  }
}

void Labeling::set(Vertex v, std::uint8_t label) {
  if (v < 0 || v >= size()) throw OutOfRange("vertex " + std::to_string(v));
  if (label > 2) throw InvalidParameters("label " + std::to_string(label) + " not in {0,1,2}");
  values_[v] = label;
}

int Labeling::weight() const { return std::accumulate(values_.begin(), values_.end(), 0); }

std::vector<Vertex> Labeling::level_set(int label) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (values_[v] == label) out.push_back(v);
  }
  return out;
}

RainbowLabeling::RainbowLabeling(int n, int k) : n_(n), k_(k), masks_(2 * std::max(n, 0), 0) {}

RainbowLabeling::RainbowLabeling(int n, int k, std::vector<std::uint8_t> masks)
    : n_(n), k_(k), masks_(std::move(masks)) {
  if (static_cast<int>(masks_.size()) != 2 * n) {
    throw InvalidParameters("rainbow labeling needs 2n values");
  }
  for (auto m : masks_) {
    if (m > 3) throw InvalidParameters("rainbow mask out of range");
  }
}

void RainbowLabeling::set(Vertex v, std::uint8_t mask) {
  if (v < 0 || v >= size()) throw OutOfRange("vertex " + std::to_string(v));
  if (mask > 3) throw InvalidParameters("rainbow mask out of range");
  masks_[v] = mask;
}

int RainbowLabeling::weight() const {
  int w = 0;
  for (auto m : masks_) w += std::popcount(static_cast<unsigned>(m));
  return w;
}

int weight(const Labeling& f) { return f.weight(); }

ValidationReport validate_idf(const PetersenGraph& g, const Labeling& f) {
  check_same_graph(g, f.n(), f.k());
  ValidationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f[v] != 0) continue;
    int sum = 0;
    for (Vertex u : g.neighbors(v)) sum += f[u];
    if (sum < 2) report.violations.push_back({v, sum});
  }
  report.valid = report.violations.empty();
  return report;
}

ValidationReport validate_2rdf(const PetersenGraph& g, const RainbowLabeling& f) {
  check_same_graph(g, f.n(), f.k());
  ValidationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f[v] != RainbowLabeling::kEmpty) continue;
    int colors = 0;
    for (Vertex u : g.neighbors(v)) colors |= f[u];
    if (colors != RainbowLabeling::kBoth) report.violations.push_back({v, colors});
  }
  report.valid = report.violations.empty();
  return report;
}

ValidationReport validate_dominating(const PetersenGraph& g, std::span<const Vertex> set) {
  std::vector<int> in_set(g.vertex_count(), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.vertex_count()) throw OutOfRange("vertex " + std::to_string(v));
    in_set[v] = 1;
  }
  ValidationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int dominators = in_set[v];
    for (Vertex u : g.neighbors(v)) dominators += in_set[u];
    if (dominators == 0) report.violations.push_back({v, 0});
  }
  report.valid = report.violations.empty();
  return report;
}

Labeling rainbow_to_idf(const PetersenGraph& g, const RainbowLabeling& f) {
  if (!validate_2rdf(g, f).valid) throw NotA2RDF("input is not a 2-rainbow dominating function");
  std::vector<std::uint8_t> values(f.size());
  for (Vertex v = 0; v < f.size(); ++v) {
    values[v] = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(f[v])));
  }
  return Labeling(f.n(), f.k(), std::move(values));
}

std::vector<ColumnWeight> column_weights(const Labeling& f) {
  std::vector<ColumnWeight> out;
  out.reserve(f.n());
  for (int i = 0; i < f.n(); ++i) out.push_back({i, f[2 * i] + f[2 * i + 1]});
  return out;
}

Labeling rotate_columns(const Labeling& f, int shift) {
  const int n = f.n();
  std::vector<std::uint8_t> values(2 * n);
  for (int i = 0; i < n; ++i) {
    const int src = ((i - shift) % n + n) % n;
    values[2 * i] = f[2 * src];
    values[2 * i + 1] = f[2 * src + 1];
  }
  return Labeling(n, f.k(), std::move(values));
}

EdgeClasses edge_classes(const PetersenGraph& g, const Labeling& f) {
  check_same_graph(g, f.n(), f.k());
  EdgeClasses out;
  for (const auto& [u, v] : g.edges()) {
    const int a = f[u], b = f[v];
    if (a == 1 && b == 1) {
      out.e11.emplace_back(u, v);
    } else if ((a == 1 && b == 2) || (a == 2 && b == 1)) {
      out.e12.emplace_back(u, v);
    }
  }
  return out;
}

std::string render_matrix(const Labeling& f) {
  std::string out;
  for (int row = 0; row < 2; ++row) {
    if (row == 1) out += " /";
    for (int i = 0; i < f.n(); ++i) {
      if (row == 1 || i > 0) out += ' ';
      out += static_cast<char>('0' + f[2 * i + row]);
    }
  }
  return out;
}

Labeling parse_matrix(std::string_view text, int n, int k) {
  std::vector<std::vector<std::uint8_t>> rows(1);
  for (char c : text) {
    if (c == '/' || c == '\n') {
      if (!rows.back().empty()) rows.emplace_back();
    } else if (c >= '0' && c <= '2') {
      rows.back().push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\t' && c != '\r') {
      throw FormatError(std::string("unexpected character '") + c + "' in matrix text");
    }
  }
  if (rows.back().empty()) rows.pop_back();
  if (rows.size() != 2) {
    throw FormatError("matrix text needs exactly 2 rows, got " + std::to_string(rows.size()));
  }
  if (static_cast<int>(rows[0].size()) != n || static_cast<int>(rows[1].size()) != n) {
    throw FormatError("matrix rows need " + std::to_string(n) + " columns each");
  }
  std::vector<std::uint8_t> values(2 * n);
  for (int i = 0; i < n; ++i) {
    values[2 * i] = rows[0][i];
    values[2 * i + 1] = rows[1][i];
  }
  return Labeling(n, k, std::move(values));
}

std::string rainbow_label_string(std::uint8_t mask) {
  switch (mask) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "2";
    case 3: return "12";
  }
  throw InvalidParameters("rainbow mask out of range");
}

std::uint8_t parse_rainbow_label(std::string_view s) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  if (s == "2") return 2;
  if (s == "12") return 3;
  throw FormatError("bad rainbow label '" + std::string(s) + "'");
}

}  // namespace gpid
