#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orconv/convexity.hpp"

using namespace orconv;

TEST_CASE("distances on cycles and paths") {
  auto c4 = oracle::directed_cycle(4);
  CHECK(distances(c4, 0) == std::vector<int>{0, 1, 2, 3});
  auto p3 = oracle::directed_path(3);
  CHECK(distances(p3, 2) == std::vector<int>{kUnreachable, kUnreachable, 0});
}

TEST_CASE("interval table entries") {
  auto c4 = oracle::directed_cycle(4);
  IntervalTable t(c4);
  CHECK(t.entry(0, 2) == VertexSet{0, 1, 2});
  CHECK(t.entry(0, 0) == VertexSet{0});
  auto tt = oracle::transitive_triangle();
  CHECK(IntervalTable(tt).entry(0, 2) == VertexSet{0, 2});
  // Unreachable pairs have empty intervals.
  CHECK(IntervalTable(oracle::directed_path(3)).entry(2, 0).empty());
}

TEST_CASE("hull closure") {
  auto c4 = oracle::directed_cycle(4);
  IntervalTable t(c4);
  for (Vertex v = 0; v < 4; ++v) CHECK(hull(t, VertexSet::single(v)) == VertexSet::single(v));
  CHECK(hull(t, VertexSet{0, 1}) == VertexSet::full(4));
  CHECK_THROWS_WITH_AS(hull(t, VertexSet{}), "empty hull seed", Error);
}

TEST_CASE("is_convex examples") {
  auto c4 = oracle::directed_cycle(4);
  IntervalTable t(c4);
  CHECK(is_convex(t, VertexSet{2}));
  CHECK_FALSE(is_convex(t, VertexSet{0, 2}));
  CHECK(is_convex(IntervalTable(oracle::transitive_triangle()), VertexSet{0, 2}));
  CHECK_THROWS_AS(is_convex(t, VertexSet{}), Error);
}

TEST_CASE("strong connectivity") {
  CHECK(is_strong(oracle::directed_cycle(5)));
  CHECK_FALSE(is_strong(oracle::directed_path(4)));
  auto c4 = oracle::directed_cycle(4);
  CHECK(is_strong_on(c4, VertexSet{1}));
  CHECK_FALSE(is_strong_on(c4, VertexSet{0, 1}));
}

TEST_CASE("vertex classification") {
  auto p3 = oracle::directed_path(3);
  CHECK(classify_vertex(p3, 0) == VertexKind::source);
  CHECK(classify_vertex(p3, 2) == VertexKind::sink);
  CHECK(classify_vertex(p3, 1) == VertexKind::ordinary);
  CHECK(classify_vertex(oracle::transitive_triangle(), 1) == VertexKind::transitive);
  // In-neighbourhood follows the standard convention: N-(1) = {0}.
  auto tt = oracle::transitive_triangle();
  CHECK(tt.in(1) == VertexSet{0});
  CHECK(tt.out(1) == VertexSet{2});
}

TEST_CASE("boundaries") {
  auto c4 = oracle::directed_cycle(4);
  CHECK(out_boundary(c4, VertexSet{0}) == std::vector<Arc>{{0, 1}});
  CHECK(in_boundary(c4, VertexSet{0}) == std::vector<Arc>{{3, 0}});
  auto p3 = oracle::directed_path(3);
  CHECK(out_boundary(p3, VertexSet{0, 1}) == std::vector<Arc>{{1, 2}});
  CHECK(in_boundary(p3, VertexSet{0, 1}).empty());
  CHECK_THROWS_AS(out_boundary(p3, VertexSet{}), Error);
  CHECK_THROWS_AS(in_boundary(p3, VertexSet::full(3)), Error);
}

TEST_CASE("orientation invariants are enforced") {
  OrientedGraph g(3);
  g.add_arc(0, 1);
  CHECK_THROWS_AS(g.add_arc(1, 0), Error);
  CHECK_THROWS_AS(g.add_arc(2, 2), Error);
  CHECK_THROWS_AS(g.add_arc(0, 3), Error);
  CHECK_THROWS_AS(OrientedGraph(0), Error);
}

TEST_CASE("reverse is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_oriented(rng, 9, 0.3);
    CHECK(reverse(reverse(g)) == g);
    for (auto [u, v] : g.arcs()) CHECK(reverse(g).has_arc(v, u));
  }
}

TEST_CASE("directed girth and bipartiteness") {
  CHECK(directed_girth(oracle::directed_cycle(6)) == 6);
  CHECK(directed_girth(oracle::directed_path(4)) == kUnreachable);
  CHECK(is_bipartite(oracle::directed_cycle(6).underlying()));
  CHECK_FALSE(is_bipartite(oracle::directed_cycle(5).underlying()));
}

TEST_CASE("two-edge-connectivity") {
  CHECK(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).two_edge_connected());
  CHECK_FALSE(Graph(2, {{0, 1}}).two_edge_connected());
  // Two triangles joined by a bridge.
  CHECK_FALSE(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}).two_edge_connected());
}

TEST_CASE("property: interval entries match explicit path enumeration (n <= 8)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 6;
    auto g = oracle::random_oriented(rng, n, 0.35);
    IntervalTable t(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        auto on = oracle::geodesic_vertices_by_paths(g, u, v);
        for (Vertex w = 0; w < n; ++w) CHECK(t.entry(u, v).contains(w) == on[w]);
      }
  }
}

TEST_CASE("property: closure laws and convexity characterisation (n <= 12)") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 9;
    auto g = oracle::random_oriented(rng, n, 0.25);
    IntervalTable t(g);
    const auto d = oracle::all_pairs(g);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      const VertexSet s(bits);
      const VertexSet h = hull(t, s);
      REQUIRE(s.subset_of(h));
      REQUIRE(hull(t, h) == h);
      const bool convex = is_convex(t, s);
      REQUIRE(convex == (h == s));
      REQUIRE(convex == oracle::convex_by_definition(d, s));
    }
    // Monotonicity on random pairs A ⊆ B.
    std::uniform_int_distribution<std::uint64_t> pick(1, limit - 1);
    for (int k = 0; k < 200; ++k) {
      VertexSet a(pick(rng)), b(pick(rng));
      b |= a;
      CHECK(hull(t, a).subset_of(hull(t, b)));
    }
  }
}

TEST_CASE("property: hull agrees with brute-force minimal convex superset") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_oriented(rng, 8, 0.3);
    IntervalTable t(g);
    std::uniform_int_distribution<std::uint64_t> pick(1, 255);
    for (int k = 0; k < 10; ++k) {
      VertexSet s(pick(rng));
      CHECK(hull(t, s) == oracle::brute_force_hull(g, s));
    }
  }
}

TEST_CASE("property: convex sets are closed under nonempty intersection") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_oriented(rng, 9, 0.3);
    IntervalTable t(g);
    std::vector<VertexSet> convex;
    for (std::uint64_t bits = 1; bits < 512; ++bits)
      if (is_convex(t, VertexSet(bits))) convex.emplace_back(bits);
    for (VertexSet a : convex)
      for (VertexSet b : convex)
        if (!(a & b).empty()) REQUIRE(is_convex(t, a & b));
  }
}

TEST_CASE("property: convex sets of a strong digraph induce strong subdigraphs") {
  std::mt19937 rng(41);
  int strong_seen = 0;
  for (int trial = 0; trial < 400 && strong_seen < 30; ++trial) {
    auto g = oracle::random_oriented(rng, 8, 0.45);
    if (!is_strong(g)) continue;
    ++strong_seen;
    IntervalTable t(g);
    for (std::uint64_t bits = 1; bits < 256; ++bits) {
      VertexSet s(bits);
      if (s.size() >= 2 && is_convex(t, s)) REQUIRE(is_strong_on(g, s));
    }
  }
  CHECK(strong_seen >= 10);
}

TEST_CASE("property: arcs between an outside vertex and a convex set point one way (triangle-free)") {
  // Orientations of the 3x3 grid graph are triangle-free.
  std::vector<Edge> edges;
  auto id = [](int r, int c) { return r * 3 + c; };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < 3) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    OrientedGraph g(9);
    for (auto [a, b] : edges) {
      if (rng() & 1U) g.add_arc(a, b); else g.add_arc(b, a);
    }
    IntervalTable t(g);
    for (std::uint64_t bits = 1; bits < 512; ++bits) {
      VertexSet c(bits);
      if (!is_convex(t, c)) continue;
      for (Vertex x = 0; x < 9; ++x) {
        if (c.contains(x)) continue;
        const VertexSet touching = g.neighbors(x) & c;
        if (touching.empty()) continue;
        const bool all_out = touching.subset_of(g.out(x));
        const bool all_in = touching.subset_of(g.in(x));
        REQUIRE((all_out || all_in));
      }
    }
  }
}
