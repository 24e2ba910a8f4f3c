#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "gpid/constructions.hpp"
#include "gpid/solver.hpp"
#include "oracle.hpp"

using namespace gpid;

namespace {

oracle::Kind ref_kind(Invariant kind) {
  switch (kind) {
    case Invariant::italian: return oracle::Kind::italian;
    case Invariant::domination: return oracle::Kind::domination;
    case Invariant::rainbow2: return oracle::Kind::rainbow;
  }
  return oracle::Kind::italian;
}

std::vector<int> as_ints(const Witness& w) { return {w.begin(), w.end()}; }

void check_witness(const PetersenGraph& g, const SolveResult& r) {
  CHECK(validate_witness(g, r.kind, r.witness).valid);
  CHECK(witness_weight(r.kind, r.witness) == r.optimum);
  CHECK(oracle::valid(ref_kind(r.kind), oracle::adjacency(g.n(), g.k()), as_ints(r.witness)));
}

const SolveResult& exact(const BnbOutcome& o) {
  REQUIRE(std::holds_alternative<SolveResult>(o));
  return std::get<SolveResult>(o);
}

struct ThreadScope {
  explicit ThreadScope(const char* count) { setenv("GPID_THREADS", count, 1); }
  ~ThreadScope() { unsetenv("GPID_THREADS"); }
};

}  // namespace

TEST_CASE("exhaustive examples") {
  CHECK(solve_exhaustive(PetersenGraph(3, 1), Invariant::italian).optimum == 3);
  CHECK(solve_exhaustive(PetersenGraph(5, 2), Invariant::italian).optimum == 4);
  CHECK(solve_exhaustive(PetersenGraph(6, 2), Invariant::domination).optimum == 4);
  CHECK_THROWS_AS(solve_exhaustive(PetersenGraph(9, 2), Invariant::italian), BudgetExceeded);
  CHECK_THROWS_AS(solve_exhaustive(PetersenGraph(7, 2), Invariant::rainbow2), BudgetExceeded);
}

TEST_CASE("dp examples") {
  CHECK(solve_dp(10, 1, Invariant::italian).optimum == 10);
  CHECK(solve_dp(7, 2, Invariant::italian).optimum == 7);
  CHECK(solve_dp(5, 2, Invariant::rainbow2).optimum == 5);
  CHECK_THROWS_AS(solve_dp(12, 4, Invariant::italian), InvalidParameters);
  CHECK_THROWS_AS(solve_dp(6, 3, Invariant::italian), InvalidParameters);
  DpOptions tight;
  tight.max_work = 1000;
  CHECK_THROWS_AS(solve_dp(20, 3, Invariant::italian, tight), BudgetExceeded);
}

TEST_CASE("exhaustive and dp agree with a plain brute force, witnesses included") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const PetersenGraph g(n, k);
      for (auto kind : {Invariant::italian, Invariant::domination, Invariant::rainbow2}) {
        if (kind == Invariant::rainbow2 && n > 5) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        const auto ref = oracle::brute_force(n, k, ref_kind(kind));
        const auto ex = solve_exhaustive(g, kind);
        const auto dp = solve_dp(n, k, kind);
        CHECK(ex.optimum == ref.weight);
        CHECK(dp.optimum == ref.weight);
        CHECK(as_ints(ex.witness) == ref.witness);
        CHECK(as_ints(dp.witness) == ref.witness);
      }
    }
  }
}

TEST_CASE("dp equals exhaustive on the full oracle range") {
  for (int n = 3; 2 * n <= kExhaustiveMaxVertices; ++n) {
    for (int k = 1; k <= 3 && 2 * k < n; ++k) {
      const PetersenGraph g(n, k);
      for (auto kind : {Invariant::italian, Invariant::domination, Invariant::rainbow2}) {
        if (kind == Invariant::rainbow2 && 2 * n > kExhaustiveMaxVerticesRainbow) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        const auto ex = solve_exhaustive(g, kind);
        const auto dp = solve_dp(n, k, kind);
        CHECK(dp.optimum == ex.optimum);
        CHECK(dp.witness == ex.witness);
        check_witness(g, ex);
        check_witness(g, dp);
      }
    }
  }
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  for (const char* threads : {"1", "3", "8"}) {
    ThreadScope scope(threads);
    for (auto kind : {Invariant::italian, Invariant::domination, Invariant::rainbow2}) {
      const auto a = solve_dp(11, 3, kind);
      const auto b = solve_dp_serial(11, 3, kind);
      CHECK(a.optimum == b.optimum);
      CHECK(a.witness == b.witness);
      CHECK(a.explored == b.explored);
    }
    const PetersenGraph g(7, 3);
    const auto a = solve_exhaustive(g, Invariant::italian);
    const auto b = solve_exhaustive_serial(g, Invariant::italian);
    CHECK(a.witness == b.witness);
    CHECK(a.optimum == b.optimum);
  }
}

TEST_CASE("parallel branch and bound does not depend on the worker count") {
  const PetersenGraph g(13, 4);
  std::optional<BnbOutcome> first;
  for (const char* threads : {"1", "2", "5"}) {
    ThreadScope scope(threads);
    const auto o = solve_branch_and_bound(g, Invariant::italian, 200000);
    if (!first) {
      first = o;
      continue;
    }
    REQUIRE(o.index() == first->index());
    if (const auto* r = std::get_if<SolveResult>(&o)) {
      CHECK(r->optimum == std::get<SolveResult>(*first).optimum);
      CHECK(r->witness == std::get<SolveResult>(*first).witness);
    } else {
      const auto& b = std::get<BoundsOnly>(o);
      CHECK(b.lo == std::get<BoundsOnly>(*first).lo);
      CHECK(b.hi == std::get<BoundsOnly>(*first).hi);
      CHECK(b.incumbent == std::get<BoundsOnly>(*first).incumbent);
    }
  }
}

TEST_CASE("branch and bound") {
  const PetersenGraph p52(5, 2);
  CHECK(exact(solve_branch_and_bound(p52, Invariant::italian, 1'000'000)).optimum == 4);
  CHECK(exact(solve_branch_and_bound_serial(p52, Invariant::italian, 1'000'000)).optimum == 4);

  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const PetersenGraph g(n, k);
      for (auto kind : {Invariant::italian, Invariant::domination, Invariant::rainbow2}) {
        if (kind == Invariant::rainbow2 && n > 6) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        const int opt = solve_exhaustive(g, kind).optimum;
        const auto s = exact(solve_branch_and_bound_serial(g, kind, 50'000'000));
        const auto p = exact(solve_branch_and_bound(g, kind, 50'000'000));
        CHECK(s.optimum == opt);
        CHECK(p.optimum == opt);
        check_witness(g, s);
        check_witness(g, p);
      }
    }
  }

  // P(15,7): the incumbent meets the degree bound, so no search is needed.
  const PetersenGraph p157(15, 7);
  const auto c = construct_pnk(15, 7);
  const Witness seed(c.labeling.values().begin(), c.labeling.values().end());
  const auto r = exact(solve_branch_and_bound(p157, Invariant::italian, 1000, seed));
  CHECK(r.optimum == 12);
  check_witness(p157, r);
}

TEST_CASE("branch and bound with no budget returns bounds") {
  for (auto [n, k] : {std::pair{10, 3}, {12, 5}, {17, 4}}) {
    const PetersenGraph g(n, k);
    const auto o = solve_branch_and_bound(g, Invariant::italian, 0);
    const auto greedy = greedy_incumbent(g, Invariant::italian);
    CHECK(validate_witness(g, Invariant::italian, greedy).valid);
    if (const auto* b = std::get_if<BoundsOnly>(&o)) {
      CHECK(b->lo >= degree_lower_bound(g));
      CHECK(b->hi <= witness_weight(Invariant::italian, greedy));
      CHECK(b->hi <= 2 * n);
      CHECK(b->lo <= b->hi);
      CHECK(validate_witness(g, Invariant::italian, b->incumbent).valid);
    } else {
      CHECK(std::get<SolveResult>(o).optimum == degree_lower_bound(g));
    }
  }
}

TEST_CASE("lower bounds") {
  CHECK(degree_lower_bound(PetersenGraph(10, 3)) == 8);
  CHECK(degree_lower_bound(PetersenGraph(7, 2)) == 6);
  CHECK(degree_lower_bound(PetersenGraph(15, 7)) == 12);
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const PetersenGraph g(n, k);
      for (auto kind : {Invariant::italian, Invariant::domination}) {
        CHECK(invariant_lower_bound(g, kind) <= solve_exhaustive(g, kind).optimum);
      }
    }
  }
}

TEST_CASE("sandwich and invariant inequalities on solved instances") {
  for (int n = 3; n <= 16; ++n) {
    for (int k = 1; k <= 3 && 2 * k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const PetersenGraph g(n, k);
      const int gi = solve_dp(n, k, Invariant::italian).optimum;
      const int gd = solve_dp(n, k, Invariant::domination).optimum;
      const int gr = solve_dp(n, k, Invariant::rainbow2).optimum;
      CHECK(degree_lower_bound(g) <= gi);
      CHECK(gi <= gr);
      CHECK(gi <= 2 * gd);
      if (k == 1) CHECK(gi <= construct_pn1(n).actual_weight);
      if (k == 2 && n >= 5) {
        if (const auto c = construct_pn2(n)) CHECK(gi <= c->actual_weight);
      }
    }
  }
}

TEST_CASE("invariant names") {
  CHECK(parse_invariant("italian") == Invariant::italian);
  CHECK(parse_invariant("domination") == Invariant::domination);
  CHECK(parse_invariant("rainbow2") == Invariant::rainbow2);
  CHECK_THROWS_AS(parse_invariant("roman"), InvalidParameters);
}
