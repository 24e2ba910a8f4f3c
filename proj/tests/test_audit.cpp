#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "gpid/audit.hpp"
#include "gpid/constructions.hpp"
#include "gpid/enumerate.hpp"
#include "gpid/solver.hpp"
#include "oracle.hpp"

using namespace gpid;

namespace {

Labeling from_ints(int n, int k, const std::vector<int>& v) {
  return Labeling(n, k, std::vector<std::uint8_t>(v.begin(), v.end()));
}

// g(v) in tenths straight from the case table.
long long reference_charge(int n, int k, const std::vector<int>& f) {
  const auto adj = oracle::adjacency(n, k);
  long long total = 0;
  for (int v = 0; v < 2 * n; ++v) {
    long long g = f[v] == 1 ? 4 : (f[v] == 2 ? 5 : 0);
    for (int u : adj[v]) g += f[u] == 1 ? 2 : (f[u] == 2 ? 5 : 0);
    total += g;
  }
  return total;
}

}  // namespace

TEST_CASE("IDF enumeration matches the reference list") {
  for (auto [n, k, cap] : {std::tuple{4, 1, 8}, {5, 1, 10}, {5, 2, 10}, {6, 2, 7}}) {
    CAPTURE(n);
    CAPTURE(k);
    const auto expected = oracle::all_idfs(n, k, cap);
    std::vector<std::vector<int>> got;
    for_each_idf(PetersenGraph(n, k), cap, {}, [&](const std::vector<std::uint8_t>& labels) {
      got.emplace_back(labels.begin(), labels.end());
    });
    CHECK(got == expected);
  }
}

TEST_CASE("column lemma") {
  const PetersenGraph g6(6, 1);
  const auto r = check_column_lemma(g6, construct_pn1(6).labeling);
  CHECK(r.zero_columns == 0);
  CHECK(r.holds());

  const PetersenGraph g4(4, 1);
  const auto f = parse_matrix("2 0 0 0 / 0 0 2 0", 4, 1);
  REQUIRE(validate_idf(g4, f).valid);
  const auto eq = check_column_lemma(g4, f);
  CHECK(eq.zero_columns == 2);
  CHECK(eq.holds());

  CHECK_THROWS_AS(check_column_lemma(PetersenGraph(5, 2), Labeling(5, 2)), WrongFamily);

  const auto sweep = sweep_column_lemma(5, SweepOptions{});
  CHECK(sweep.violations == 0);
  CHECK(sweep.labelings == oracle::all_idfs(5, 1, 20).size());
}

TEST_CASE("column lemma holds on every valid IDF for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    const auto sweep = sweep_column_lemma(n, SweepOptions{});
    CAPTURE(n);
    CHECK(sweep.labelings > 0);
    CHECK(sweep.passed());
  }
}

TEST_CASE("bagging certificate examples") {
  const PetersenGraph g4(4, 1);
  const auto c = bagging_certificate(g4, construct_pn1(4).labeling);
  CHECK(c.m == std::array<int, 5>{0, 0, 0, 0, 4});
  CHECK(c.bags[4] == std::vector<int>{0, 1, 2, 3});
  CHECK(c.implied_bound() == 4);
  CHECK(c.weighted_bound() == 4);
  CHECK(c.consistent());

  // Any valid IDF of P(6,1) with a zero column followed by a weight-2 column
  // puts that pair in the first bag.
  const PetersenGraph g6(6, 1);
  int seen = 0;
  for (const auto& v : oracle::all_idfs(6, 1, 8)) {
    const auto f = from_ints(6, 1, v);
    const auto w = column_weights(f);
    for (int i = 0; i < 6; ++i) {
      if (w[i].weight == 0 && w[(i + 1) % 6].weight == 2) {
        const auto cert = bagging_certificate(g6, f);
        CHECK(cert.m[0] >= 1);
        ++seen;
        break;
      }
    }
  }
  CHECK(seen > 0);

  CHECK_THROWS_AS(bagging_certificate(PetersenGraph(6, 2), Labeling(6, 2)), WrongFamily);
}

TEST_CASE("bagging is sound on every valid IDF of P(n,1), n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    const PetersenGraph g(n, 1);
    std::uint64_t count = 0;
    std::uint64_t bad = 0;
    for_each_idf(g, 2 * g.vertex_count(), {}, [&](const std::vector<std::uint8_t>& labels) {
      const Labeling f(n, 1, labels);
      const auto c = bagging_certificate(g, f);
      ++count;
      const bool ok = c.bags_disjoint() && c.column_count() == n && c.implied_bound() <= f.weight() &&
                      c.weighted_bound() <= f.weight() && c.unbagged_zero_columns.empty();
      bad += !ok;
    });
    CAPTURE(n);
    CHECK(count > 0);
    CHECK(bad == 0);
  }
}

TEST_CASE("discharge ledger") {
  const PetersenGraph g(7, 2);
  const auto zero = discharge(g, Labeling(7, 2));
  CHECK(zero.g_total_tenths == 0);
  CHECK(zero.r_total_tenths == -56);
  CHECK(zero.identity_holds());

  const auto c = *construct_pn2(15);
  const auto led = discharge(PetersenGraph(15, 2), c.labeling);
  CHECK(led.r_total_tenths == 0);
  CHECK(led.min_g_tenths() >= 4);

  SweepOptions seven;
  seven.min_weight = 7;
  seven.max_weight = 7;
  seven.collect_rows = true;
  const auto rep = sweep_discharge(7, seven);
  CHECK(rep.labelings > 0);
  for (const auto& row : rep.rows) CHECK(row.r_tenths == 14);

  CHECK_THROWS_AS(discharge(PetersenGraph(7, 1), Labeling(7, 1)), WrongFamily);
}

TEST_CASE("discharge identity against the reference charge on random labelings") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 8);
    std::vector<int> v(2 * n);
    for (auto& x : v) x = static_cast<int>(rng() % 3);
    const auto led = discharge(PetersenGraph(n, 2), from_ints(n, 2, v));
    int w = 0;
    for (int x : v) w += x;
    CHECK(led.g_total_tenths == reference_charge(n, 2, v));
    CHECK(led.g_total_tenths == 10LL * w);
    CHECK(led.r_total_tenths == 10LL * w - 8LL * n);
  }
  const auto rep = sweep_discharge_random(12, 10000, 1);
  CHECK(rep.labelings == 10000);
  CHECK(rep.passed());
}

TEST_CASE("per-vertex charge on every valid IDF of P(n,2), n <= 7") {
  for (int n = 5; n <= 7; ++n) {
    const auto rep = sweep_discharge(n, SweepOptions{});
    CAPTURE(n);
    CHECK(rep.labelings > 0);
    CHECK(rep.passed());
  }
}

TEST_CASE("findings") {
  const PetersenGraph g(6, 2);
  auto f = Labeling(6, 2, std::vector<std::uint8_t>(12, 1));
  f.set(0, 2);
  const auto with_two = check_findings(g, f);
  CHECK(with_two.findings[3].hypothesis);
  CHECK(with_two.findings[3].conclusion);

  // Two 2s on the outer cycle at distance 3 and matching inner support: no
  // V1 vertices, hence no E11 or E12 edges.
  const auto plain = parse_matrix("2 0 0 2 0 0 / 0 2 0 0 2 0", 6, 2);
  if (validate_idf(g, plain).valid) {
    const auto r = check_findings(g, plain);
    CHECK_FALSE(r.findings[4].hypothesis);
    CHECK_FALSE(r.findings[7].hypothesis);
  }
  for (const auto& v : oracle::all_idfs(6, 2, 8)) {
    const auto h = from_ints(6, 2, v);
    if (!h.level_set(2).empty()) continue;
    const auto cls = edge_classes(g, h);
    if (!cls.e11.empty()) continue;
    const auto r = check_findings(g, h);
    CHECK_FALSE(r.findings[3].hypothesis);
    CHECK_FALSE(r.findings[4].hypothesis);
    CHECK_FALSE(r.findings[7].hypothesis);
  }

  SweepOptions capped;
  capped.max_weight = 8;
  const auto sweep = sweep_findings(6, capped);
  CHECK(sweep.labelings > 0);
  CHECK(sweep.violations == 0);

  CHECK_THROWS_AS(check_findings(g, Labeling(6, 2)), InvalidParameters);
  CHECK_THROWS_AS(check_findings(PetersenGraph(6, 1), Labeling(6, 1)), WrongFamily);
}

TEST_CASE("findings hold on every valid IDF of P(6,2) and P(7,2)") {
  for (int n : {6, 7}) {
    const auto rep = sweep_findings(n, SweepOptions{});
    CAPTURE(n);
    CHECK(rep.labelings > 0);
    CHECK(rep.violations == 0);
  }
}

TEST_CASE("threshold") {
  CHECK(threshold_check(6) == 2);
  CHECK(threshold_check(7) == 4);
  CHECK(threshold_check(10) == 0);
  CHECK(threshold_check(9) == 8);
  CHECK(threshold_check(8) == 6);
}

TEST_CASE("sweeps do not depend on the worker count") {
  SweepOptions opts;
  opts.collect_rows = true;
  opts.max_weight = 8;
  setenv("GPID_THREADS", "1", 1);
  const auto a = sweep_findings(7, opts);
  setenv("GPID_THREADS", "4", 1);
  const auto b = sweep_findings(7, opts);
  unsetenv("GPID_THREADS");
  CHECK(a.labelings == b.labelings);
  CHECK(a.by_weight == b.by_weight);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].weight == b.rows[i].weight);
    CHECK(a.rows[i].findings == b.rows[i].findings);
  }
}
