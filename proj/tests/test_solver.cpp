#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orconv/solver.hpp"

using namespace orconv;

TEST_CASE("convexity number of small digraphs") {
  // A source is present, so con = n - 1.
  CHECK(convexity_number(oracle::directed_path(3)).claimed == 2);
  CHECK(convexity_number(oracle::directed_cycle(4)).claimed == 1);
  CHECK(convexity_number(oracle::transitive_triangle()).claimed == 2);
  CHECK_THROWS_WITH_AS(convexity_number(OrientedGraph(1)), "trivial digraph", Error);
  CHECK_THROWS_AS(convexity_number(OrientedGraph(3, {{0, 1}})), Error);
}

TEST_CASE("both regimes return the same lexicographically least maximum set") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 11;
    auto g = oracle::random_oriented(rng, n, 0.3);
    auto a = convexity_number(g, SolverRegime::subset_scan);
    auto b = convexity_number(g, SolverRegime::closure_enumeration);
    REQUIRE(a.claimed == b.claimed);
    REQUIRE(a.witness == b.witness);
    REQUIRE(a.evidence == Evidence::exhaustive_max);
  }
}

TEST_CASE("property: solver agrees with the all-subsets oracle (n <= 10)") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    auto g = oracle::random_oriented(rng, n, trial % 2 ? 0.2 : 0.5);
    auto cert = convexity_number(g);
    REQUIRE(cert.claimed == oracle::brute_force_con(g));
    REQUIRE(cert.witness.size() == cert.claimed);
    REQUIRE(cert.witness != g.vertices());
    REQUIRE(is_convex(IntervalTable(g), cert.witness));
  }
}

TEST_CASE("property: reversal preserves the convexity number") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = oracle::random_oriented(rng, 3 + trial % 8, 0.35);
    CHECK(convexity_number(g).claimed == convexity_number(reverse(g)).claimed);
  }
}

TEST_CASE("max_convex_at_least") {
  auto c4 = oracle::directed_cycle(4);
  CHECK(max_convex_at_least(c4, 1).has_value());
  CHECK_FALSE(max_convex_at_least(c4, 2).has_value());
  CHECK_THROWS_AS(max_convex_at_least(c4, 4), Error);
  CHECK_THROWS_AS(max_convex_at_least(c4, 0), Error);
  auto p4 = oracle::directed_path(4);
  auto s = max_convex_at_least(p4, 3);
  REQUIRE(s);
  CHECK(s->size() >= 3);
  CHECK(is_convex(IntervalTable(p4), *s));
}

TEST_CASE("enumeration visits every convex set once") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_oriented(rng, 4 + trial % 6, 0.3);
    IntervalTable t(g);
    std::vector<std::uint64_t> seen;
    for_each_convex_set(g, [&](VertexSet s) {
      seen.push_back(s.low_bits());
      return true;
    });
    std::vector<std::uint64_t> expected;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits)
      if (is_convex(t, VertexSet(bits))) expected.push_back(bits);
    std::sort(seen.begin(), seen.end());
    CHECK(seen == expected);
  }
}

TEST_CASE("certify") {
  auto c4 = oracle::directed_cycle(4);
  auto cert = certify(c4, 1, Evidence::exhaustive_max);
  CHECK(cert.claimed == 1);
  CHECK(cert.witness.size() == 1);
  CHECK_THROWS_AS(certify(c4, 2, Evidence::exhaustive_max), RefutedClaim);
  CHECK_THROWS_AS(certify(c4, 2, Evidence::membership_only), RefutedClaim);
  CHECK_THROWS_AS(certify(c4, 0, Evidence::membership_only), Error);

  auto p4 = oracle::directed_path(4);
  // A convex set of size 2 exists even though con = 3.
  CHECK(certify(p4, 2, Evidence::membership_only).witness.size() == 2);
  try {
    certify(p4, 2, Evidence::exhaustive_max);
    FAIL("expected refutation");
  } catch (const RefutedClaim& e) {
    REQUIRE(e.counterexample);
    CHECK(e.counterexample->size() == 3);
  }
  CHECK(certify(p4, 3, Evidence::membership_only, VertexSet{0, 1, 2}).witness == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(certify(p4, 2, Evidence::membership_only, VertexSet{0, 2}), RefutedClaim);
}

TEST_CASE("near-order checks") {
  auto r = near_order_checks(oracle::transitive_triangle());
  CHECK(r.con == 2);
  CHECK(r.has_special_vertex);
  CHECK(r.ok());
  // All 8 orientations of the path on 4 vertices.
  for (const auto& g : oracle::all_orientations(4, {{0, 1}, {1, 2}, {2, 3}})) {
    auto rep = near_order_checks(g);
    CHECK(rep.full_minus_one_equivalence);
    CHECK(rep.no_two_holds);
  }
}
