#pragma once

#include <optional>
#include <string>

#include "gpid/constructions.hpp"

namespace gpid {

struct FormulaResult {
  enum class Kind { exact, bounds, external, unknown };

  Kind kind = Kind::unknown;
  long long value = 0;
  long long lo = 0;
  long long hi = 0;
  /// Which published result the value comes from, in words.
  std::string source;
  /// Unrounded expression behind `value` or `hi`.
  std::optional<Rational> exact_rational;

  bool is_exact() const { return kind == Kind::exact; }
};

std::string to_string(FormulaResult::Kind kind);

/// gamma_I(P(n,k)). Exact for k = 1, 2 and for k >= 4 with k = 2,3 (mod 5)
/// and n = 0 (mod 5); bounds for the remaining k >= 4; external for k = 3.
FormulaResult italian_value(int n, int k);

/// gamma_r2(P(n,k)) for k = 1 (n >= 5) and k = 2; unknown elsewhere.
FormulaResult rainbow2_value(int n, int k);

/// gamma(P(n,k)) for k = 1 and k = 2; unknown elsewhere.
FormulaResult domination_value(int n, int k);

struct ItalianGraphVerdict {
  bool is_italian = false;
  long long gamma_i = 0;
  long long twice_gamma = 0;
};

/// Whether gamma_I = 2 gamma, for k = 1 and k = 2.
ItalianGraphVerdict italian_graph_predicate(int n, int k);

enum class Relation { equal, italian_one_less, unknown };

std::string to_string(Relation r);

struct RelationReport {
  Relation relation = Relation::unknown;
  std::optional<long long> gamma_i;
  std::optional<long long> gamma_r2;
};

/// How gamma_I compares with gamma_r2 for k = 1 and k = 2.
RelationReport relation_report(int n, int k);

}  // namespace gpid
