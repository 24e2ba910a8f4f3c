#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <string_view>

#include "gpid/errors.hpp"

namespace gpid {

enum class Invariant { domination, italian, rainbow2 };

std::string to_string(Invariant kind);
Invariant parse_invariant(std::string_view s);

// Local coverage rules shared by the solver kernels. A vertex labeled 0
// accumulates a "partial" from its neighbors' labels; it is satisfied once
// the partial reaches the rule's target. Partials saturate so they stay in a
// small finite range.

struct ItalianRule {
  static constexpr Invariant kind = Invariant::italian;
  static constexpr int labels = 3;
  static constexpr int partials = 3;
  static constexpr int weight(int label) { return label; }
  static constexpr int combine(int partial, int label) { return std::min(2, partial + label); }
  static constexpr bool satisfied(int label, int partial) { return label != 0 || partial >= 2; }
  static constexpr int deficiency(int partial) { return 2 - partial; }
};

struct DominationRule {
  static constexpr Invariant kind = Invariant::domination;
  static constexpr int labels = 2;
  static constexpr int partials = 2;
  static constexpr int weight(int label) { return label; }
  static constexpr int combine(int partial, int label) { return std::min(1, partial + label); }
  static constexpr bool satisfied(int label, int partial) { return label != 0 || partial >= 1; }
  static constexpr int deficiency(int partial) { return 1 - partial; }
};

// Labels are color masks: 1 = {1}, 2 = {2}, 3 = {1,2}.
struct RainbowRule {
  static constexpr Invariant kind = Invariant::rainbow2;
  static constexpr int labels = 4;
  static constexpr int partials = 4;
  static constexpr int weight(int label) { return std::popcount(static_cast<unsigned>(label)); }
  static constexpr int combine(int partial, int label) { return partial | label; }
  static constexpr bool satisfied(int label, int partial) { return label != 0 || partial == 3; }
  static constexpr int deficiency(int partial) {
    return std::popcount(static_cast<unsigned>(3 & ~partial));
  }
};

template <typename F>
decltype(auto) with_rule(Invariant kind, F&& f) {
  switch (kind) {
    case Invariant::italian: return f(ItalianRule{});
    case Invariant::domination: return f(DominationRule{});
    case Invariant::rainbow2: return f(RainbowRule{});
  }
  throw InvalidParameters("unknown invariant");
}

}  // namespace gpid
