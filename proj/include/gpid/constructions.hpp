#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "gpid/labeling.hpp"

namespace gpid {

using Rational = boost::rational<long long>;

/// A run of (top, bottom) columns, stored column-major.
struct PatternBlock {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> columns;

  /// Builds a block from the two rows written as digit strings, e.g. "10100", "00011".
  static PatternBlock from_rows(std::string_view top, std::string_view bottom);

  int length() const { return static_cast<int>(columns.size()); }
  int weight() const;
  PatternBlock repeated(int times) const;
  PatternBlock& append(const PatternBlock& other);
};

struct ConstructionResult {
  Labeling labeling;
  std::string case_name;
  /// Weight the construction is supposed to have, kept exact.
  Rational claimed_weight;
  int actual_weight = 0;
  bool valid = false;
  std::vector<Violation> violations;
  /// True when the block tiles the cycle exactly (no tail).
  bool periodic = true;

  bool claimed_matches() const {
    return claimed_weight.denominator() == 1 && claimed_weight.numerator() == actual_weight;
  }
};

/// Weight-n IDF on P(n,1) from the alternating two-column block.
ConstructionResult construct_pn1(int n);

/// Weight ceil(4n/5) IDF on P(n,2) for n = 0, 5, 8 (mod 10); nullopt for
/// every other residue.
std::optional<ConstructionResult> construct_pn2(int n);

/// Block construction for P(n,k), k >= 4. Periodic when the block period
/// divides n, otherwise block prefix on columns 0..n-k-1 plus tail_h(k).
/// Validity is measured, not assumed.
ConstructionResult construct_pnk(int n, int k);

/// The k-column tail block: vertex offset j gets 1 iff j mod 6 is 0, 1, 3 or 5.
PatternBlock tail_h(int k);

/// The periodic block used by construct_pnk for this k.
PatternBlock pnk_block(int k);

/// ceil(4(n-k)/5 * (3k+2)/(3k+1) + (4k+6)/3), the general upper bound for k >= 4.
Rational pnk_upper_bound_exact(int n, int k);
long long pnk_upper_bound(int n, int k);

/// Ceiling of a nonnegative rational.
long long ceil_rational(const Rational& r);

}  // namespace gpid
