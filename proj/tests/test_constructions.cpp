#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpid/constructions.hpp"
#include "gpid/solver.hpp"
#include "oracle.hpp"

using namespace gpid;

namespace {

bool reference_valid(const Labeling& f) {
  std::vector<int> v(f.values().begin(), f.values().end());
  return oracle::valid(oracle::Kind::italian, oracle::adjacency(f.n(), f.k()), v);
}

std::string rows_of(const PatternBlock& b) {
  std::string top, bottom;
  for (auto [t, d] : b.columns) {
    top += static_cast<char>('0' + t);
    bottom += static_cast<char>('0' + d);
  }
  return top + "/" + bottom;
}

}  // namespace

TEST_CASE("P(n,1) construction") {
  const auto c4 = construct_pn1(4);
  CHECK(render_matrix(c4.labeling) == "1 0 1 0 / 0 1 0 1");
  CHECK(c4.actual_weight == 4);
  CHECK(c4.valid);
  const auto c5 = construct_pn1(5);
  CHECK(render_matrix(c5.labeling) == "1 0 1 0 1 / 0 1 0 1 0");
  CHECK(c5.actual_weight == 5);
  CHECK(c5.valid);
  const auto c3 = construct_pn1(3);
  CHECK(c3.actual_weight == 3);
  CHECK(c3.valid);
  CHECK_THROWS_AS(construct_pn1(2), InvalidParameters);
}

TEST_CASE("P(n,2) constructions") {
  const auto c15 = construct_pn2(15);
  REQUIRE(c15);
  CHECK(c15->actual_weight == 12);
  CHECK(c15->valid);
  CHECK(c15->claimed_matches());
  const auto c8 = construct_pn2(8);
  REQUIRE(c8);
  CHECK(c8->actual_weight == 7);
  CHECK(c8->valid);
  CHECK(render_matrix(c8->labeling) == "0 1 0 0 1 0 0 1 / 0 0 1 1 0 1 1 0");
  const auto c10 = construct_pn2(10);
  REQUIRE(c10);
  CHECK(c10->actual_weight == 8);
  CHECK(c10->valid);
  for (int n : {11, 12, 13, 14, 16, 17, 19}) CHECK_FALSE(construct_pn2(n).has_value());
  CHECK_THROWS_AS(construct_pn2(4), InvalidParameters);
}

TEST_CASE("P(n,1) and P(n,2) constructions hold up to n = 200") {
  for (int n = 3; n <= 200; ++n) {
    CAPTURE(n);
    const auto c = construct_pn1(n);
    CHECK(c.valid);
    CHECK(c.claimed_matches());
    CHECK(c.actual_weight == n);
    if (n >= 5) {
      if (const auto d = construct_pn2(n)) {
        CHECK(d->valid);
        CHECK(reference_valid(d->labeling));
        CHECK(d->claimed_matches());
        CHECK(d->actual_weight == (4 * n + 4) / 5);
      }
    }
  }
}

TEST_CASE("tail block") {
  CHECK(rows_of(tail_h(6)) == "100100/111111");
  CHECK(tail_h(6).weight() == 8);
  CHECK(rows_of(tail_h(7)) == "1001001/1111111");
  CHECK(tail_h(7).weight() == 10);
  CHECK(rows_of(tail_h(5)) == "10010/11111");
  CHECK(tail_h(5).weight() == 7);
  for (int k = 4; k <= 40; ++k) CHECK(tail_h(k).weight() == (4 * k + 2) / 3);
  CHECK_THROWS_AS(tail_h(3), InvalidParameters);
}

TEST_CASE("periodic blocks") {
  CHECK(rows_of(pnk_block(7)) == "10100/00011");
  CHECK(rows_of(pnk_block(8)) == "10100/00011");
  for (int k = 4; k <= 40; ++k) {
    CAPTURE(k);
    const auto g = pnk_block(k);
    switch (k % 5) {
      case 0:
      case 4:
        CHECK(g.length() == 5 * k);
        CHECK(g.weight() == 4 * k + 1);
        break;
      case 1:
        CHECK(g.length() == 3 * k + 1);
        CHECK(g.weight() == (k - 1) / 5 * 12 + 4);
        break;
      default:
        CHECK(g.length() == 5);
        CHECK(g.weight() == 4);
    }
  }
}

TEST_CASE("P(n,k) examples") {
  const auto a = construct_pnk(15, 7);
  CHECK(a.periodic);
  CHECK(a.valid);
  CHECK(a.actual_weight == 12);
  const auto b = construct_pnk(20, 8);
  CHECK(b.valid);
  CHECK(b.actual_weight == 16);
  const auto c = construct_pnk(19, 6);
  CHECK(c.periodic);
  CHECK(c.claimed_weight == Rational(16));
  CHECK(c.actual_weight == 16);
  CHECK(c.valid == reference_valid(c.labeling));
  CHECK_THROWS_AS(construct_pnk(7, 3), InvalidParameters);
  CHECK_THROWS_AS(construct_pnk(10, 5), InvalidParameters);
}

TEST_CASE("upper bound expression") {
  CHECK(pnk_upper_bound_exact(20, 4) == Rational(4 * 16, 5) * Rational(14, 13) + Rational(22, 3));
  CHECK(ceil_rational(Rational(7, 2)) == 4);
  CHECK(ceil_rational(Rational(8, 2)) == 4);
  CHECK(ceil_rational(Rational(0)) == 0);
}

TEST_CASE("P(n,k) sweep: validity measured, periodic weights within the bound") {
  for (int k = 4; k <= 12; ++k) {
    for (int n = 2 * k + 1; n <= 120; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const auto c = construct_pnk(n, k);
      CHECK(c.valid == reference_valid(c.labeling));
      CHECK(c.actual_weight == c.labeling.weight());
      if (c.periodic) {
        CHECK(c.claimed_matches());
        CHECK(c.actual_weight <= pnk_upper_bound(n, k));
      }
      if (c.valid) CHECK(c.actual_weight >= degree_lower_bound(PetersenGraph(n, k)));
    }
  }
}

TEST_CASE("rotating a valid periodic construction keeps it valid") {
  std::vector<ConstructionResult> cases;
  for (int n : {6, 9, 12}) cases.push_back(construct_pn1(n));
  for (int n : {10, 15, 20}) cases.push_back(*construct_pn2(n));
  for (auto [n, k] : {std::pair{15, 7}, {20, 8}, {19, 6}, {40, 8}, {60, 12}}) cases.push_back(construct_pnk(n, k));
  for (const auto& c : cases) {
    if (!c.valid || !c.periodic) continue;
    const PetersenGraph g(c.labeling.n(), c.labeling.k());
    for (int s = 1; s < g.n(); ++s) {
      CAPTURE(g.n());
      CAPTURE(s);
      CHECK(validate_idf(g, rotate_columns(c.labeling, s)).valid);
    }
  }
}
