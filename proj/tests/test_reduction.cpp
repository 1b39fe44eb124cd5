#include "doctest.h"
#include "oracles.hpp"
#include "orconv/acceptance.hpp"
#include "orconv/reduction.hpp"
#include "orconv/solver.hpp"

using namespace orconv;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("size formulas for hexagon gadgets") {
  for (int order = 3; order <= 5; ++order)
    for (const Graph& g : connected_graphs(order)) {
      const auto r = reduce({g, 3});
      CHECK(r.digraph.order() == 6 * g.order() + 4);
      CHECK(r.digraph.arc_count() == 8 * g.order() + 2 * g.size() + 3);
      CHECK(r.k_prime == 18);
      CHECK(is_strong(r.digraph));
    }
}

TEST_CASE("P3 instance: frozen shape") {
  const auto r = reduce({path3(), 3});
  CHECK(r.digraph.order() == 22);
  CHECK(r.digraph.arc_count() == 31);
  CHECK(directed_girth(r.digraph) == 6);
  CHECK(is_bipartite(r.digraph.underlying()));
  CHECK(r.digraph.name(r.gadgets[1].x) == "x1");
  CHECK(r.digraph.name(r.gadgets[1].y) == "y1");
  CHECK(r.digraph.name(r.z.front()) == "z1");
  CHECK(r.digraph.name(r.z.back()) == "z4");
  // x_u sits opposite y_u on its hexagon.
  for (const auto& gd : r.gadgets) CHECK(distances(r.digraph, gd.x)[gd.y] == 3);
}

TEST_CASE("structural claims hold on P3 and the triangle") {
  for (const Graph& g : {path3(), triangle()}) {
    const auto rep = verify_claims(reduce({g, 3}), g);
    CHECK(rep.ok());
    CHECK(rep.counterexamples.empty());
    CHECK(rep.convex_sets_checked > 0);
  }
}

TEST_CASE("con(reduce(G)) = 2h * omega(G); omega against the subset oracle") {
  for (int order = 3; order <= 5; ++order)
    for (const Graph& g : connected_graphs(order)) {
      const int omega = oracle::brute_force_clique(g);
      CHECK(clique_number(g) == omega);
      const CliqueInstance inst{g, 3};
      const auto rep = correspondence_check(inst, reduce(inst));
      CHECK(rep.omega == omega);
      CHECK(rep.con == 6 * omega);
      CHECK(rep.ok());
    }
}

TEST_CASE("decision agreement for several k") {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (int k = 3; k <= 5; ++k) {
    const CliqueInstance inst{k4, k};
    const auto rep = correspondence_check(inst, reduce(inst));
    CHECK(rep.decision_agrees);
    CHECK((rep.con >= 6 * k) == (k <= 4));
  }
}

TEST_CASE("longer gadgets raise the girth") {
  for (int h = 3; h <= 6; ++h) {
    const auto r = reduce({path3(), 3}, h);
    CHECK(r.digraph.order() == 2 * h * 3 + h + 1);
    CHECK(directed_girth(r.digraph) == 2 * h);
    // Antipodal x and y share a colour class when h is even, and x_u -> y_v
    // then joins two vertices of one class.
    CHECK(is_bipartite(r.digraph.underlying()) == (h % 2 == 1));
    CHECK(correspondence_check({path3(), 3}, r).con == 2 * h * 2);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(reduce({path3(), 2}), Error);
  CHECK_THROWS_AS(reduce({path3(), 3}, 2), Error);
  CHECK_THROWS_AS(reduce({Graph(3, {{0, 1}}), 3}), Error);  // disconnected
  CHECK_THROWS_AS(reduce({Graph(21), 3}), Error);
}

TEST_CASE("graph readers") {
  const Graph a = parse_graph(R"({"n": 3, "edges": [[0,1],[1,2]]})");
  CHECK(a.order() == 3);
  CHECK(a.size() == 2);
  const Graph b = parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(b.edges() == a.edges());
  const Graph c = graph_from_json(R"({"edges": [[0,3],[3,0]]})");  // order inferred, duplicate dropped
  CHECK(c.order() == 4);
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(parse_graph("{\"edges\": [[0]]}"), Error);
  CHECK_THROWS_AS(parse_graph("{bad json"), Error);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), Error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph("q 1\n"), Error);
}

TEST_CASE("isomorphism classes of small connected graphs") {
  CHECK(connected_graphs(3).size() == 2);
  CHECK(connected_graphs(4).size() == 6);
  CHECK(connected_graphs(5).size() == 21);
}
