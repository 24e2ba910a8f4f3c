#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpid/constructions.hpp"
#include "gpid/formulas.hpp"
#include "gpid/solver.hpp"

using namespace gpid;

TEST_CASE("italian values") {
  CHECK(italian_value(9, 1).is_exact());
  CHECK(italian_value(9, 1).value == 9);
  CHECK(italian_value(12, 2).value == 11);
  CHECK(italian_value(7, 2).value == 7);
  CHECK(italian_value(10, 2).value == 8);
  const auto f = italian_value(15, 7);
  CHECK(f.is_exact());
  CHECK(f.value == 12);
  CHECK(italian_value(20, 3).kind == FormulaResult::Kind::external);

  const auto b = italian_value(21, 4);
  CHECK(b.kind == FormulaResult::Kind::bounds);
  CHECK(b.lo == 17);
  CHECK(b.hi == pnk_upper_bound(21, 4));
  REQUIRE(b.exact_rational);
  CHECK(*b.exact_rational == pnk_upper_bound_exact(21, 4));

  CHECK_THROWS_AS(italian_value(6, 3), InvalidParameters);
  CHECK_THROWS_AS(italian_value(2, 1), InvalidParameters);
}

TEST_CASE("cited values") {
  CHECK(rainbow2_value(5, 2).value == 5);
  CHECK(rainbow2_value(10, 2).value == 8);
  CHECK(rainbow2_value(8, 1).value == 8);
  CHECK(rainbow2_value(4, 1).kind == FormulaResult::Kind::unknown);
  CHECK(rainbow2_value(9, 3).kind == FormulaResult::Kind::unknown);
  CHECK(domination_value(6, 1).value == 4);
  CHECK(domination_value(8, 1).value == 4);
  CHECK(domination_value(7, 2).value == 5);
  CHECK(domination_value(9, 4).kind == FormulaResult::Kind::unknown);
}

TEST_CASE("formulas agree with the DP for k = 1, 2 and n <= 20") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 2 * k + 1; n <= 20; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(italian_value(n, k).value == solve_dp(n, k, Invariant::italian).optimum);
      CHECK(domination_value(n, k).value == solve_dp(n, k, Invariant::domination).optimum);
      const auto r = rainbow2_value(n, k);
      if (r.is_exact()) CHECK(r.value == solve_dp(n, k, Invariant::rainbow2).optimum);
    }
  }
}

TEST_CASE("bounds are consistent with constructions") {
  for (int k = 4; k <= 12; ++k) {
    for (int n = 2 * k + 1; n <= 80; ++n) {
      const auto f = italian_value(n, k);
      const auto c = construct_pnk(n, k);
      if (f.is_exact()) {
        if (c.valid) CHECK(f.value <= c.actual_weight);
        continue;
      }
      CHECK(f.lo <= f.hi);
      if (c.valid) CHECK(f.lo <= c.actual_weight);
    }
  }
}

TEST_CASE("italian graph predicate") {
  auto v = italian_graph_predicate(8, 1);
  CHECK(v.is_italian);
  CHECK(v.gamma_i == 8);
  CHECK(v.twice_gamma == 8);
  v = italian_graph_predicate(6, 1);
  CHECK_FALSE(v.is_italian);
  CHECK(v.twice_gamma == 8);
  v = italian_graph_predicate(10, 2);
  CHECK_FALSE(v.is_italian);
  CHECK(v.gamma_i == 8);
  CHECK(v.twice_gamma == 12);
  for (int n = 3; n <= 40; ++n) CHECK(italian_graph_predicate(n, 1).is_italian == (n % 4 == 0));
  for (int n = 5; n <= 40; ++n) {
    CHECK_FALSE(italian_graph_predicate(n, 2).is_italian);
    const auto p = italian_graph_predicate(n, 2);
    CHECK(p.is_italian == (italian_value(n, 2).value == 2 * domination_value(n, 2).value));
  }
  CHECK_THROWS_AS(italian_graph_predicate(9, 3), InvalidParameters);
}

TEST_CASE("relation report") {
  auto r = relation_report(5, 2);
  CHECK(r.relation == Relation::italian_one_less);
  CHECK(*r.gamma_i == 4);
  CHECK(*r.gamma_r2 == 5);
  r = relation_report(10, 2);
  CHECK(r.relation == Relation::equal);
  CHECK(*r.gamma_i == 8);
  r = relation_report(7, 1);
  CHECK(r.relation == Relation::equal);
  CHECK(relation_report(4, 1).relation == Relation::unknown);
  for (int n = 5; n <= 60; ++n) {
    const bool one_less = n % 10 == 5 || n % 10 == 8;
    CHECK(relation_report(n, 2).relation == (one_less ? Relation::italian_one_less : Relation::equal));
  }
  CHECK_THROWS_AS(relation_report(9, 4), InvalidParameters);
}
