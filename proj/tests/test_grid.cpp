#include "doctest.h"
#include "oracles.hpp"
#include "orconv/constructions.hpp"
#include "orconv/grid.hpp"

using namespace orconv;

TEST_CASE("grid indexing matches the coordinate oracle") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 5; ++m) {
      const GridSpec s(n, m);
      CHECK(s.edges() == oracle::grid_edges(n, m));
      CHECK(s.edge_count() == static_cast<int>(s.edges().size()));
      for (Vertex v = 0; v < s.order(); ++v) CHECK(s.vertex(s.cell(v)) == v);
    }
  const GridSpec s(4, 3);
  CHECK(s.vertex(1, 1) == 0);
  CHECK(s.vertex(4, 3) == 11);
  CHECK(s.label(s.vertex(2, 3)) == "2_3");
  CHECK(s.block(2, 3, 1, 2).size() == 4);
  CHECK(s.column(1).size() == 3);
  CHECK(s.row(2).size() == 4);
  CHECK_THROWS_AS(s.vertex(5, 1), Error);
  CHECK_THROWS_AS(GridSpec(1, 3), Error);
  CHECK_THROWS_AS(GridSpec(12, 11), Error);  // 132 vertices
}

TEST_CASE("regions") {
  const GridSpec s(5, 4);
  const Region r = Region::rectangle(1, 3, 1, 3);
  CHECK(r.squares().size() == 4);
  CHECK(r.vertices(s).size() == 9);
  CHECK(r.edges(s).size() == 12);
  CHECK(r.dual_connected());
  const Region split = Region::rectangle(1, 2, 1, 2) + Region::rectangle(3, 4, 3, 4);
  CHECK_FALSE(split.dual_connected());
  CHECK((Region::whole(s) - r).squares().size() == 8);
}

TEST_CASE("whirlpool: every unit square is a directed 4-cycle, con 1 against the oracle") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      const auto o = whirlpool(n, m);
      const auto& d = o.digraph;
      CHECK(d.arc_count() == o.spec.edge_count());
      CHECK(oracle::strong_by_distances(d));
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < m; ++j) {
          const Vertex a = o.spec.vertex(i, j), b = o.spec.vertex(i + 1, j), c = o.spec.vertex(i + 1, j + 1),
                       e = o.spec.vertex(i, j + 1);
          const bool cw = d.has_arc(a, e) && d.has_arc(e, c) && d.has_arc(c, b) && d.has_arc(b, a);
          const bool ccw = d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, e) && d.has_arc(e, a);
          CHECK((cw || ccw));
        }
      if (n * m <= 12) CHECK(oracle::brute_force_con(d) == 1);
      CHECK(convexity_number(d).claimed == 1);
    }
}

TEST_CASE("anti-whirlpool is the reverse") {
  CHECK(whirlpool(4, 3, true).digraph == reverse(whirlpool(4, 3).digraph));
}

TEST_CASE("drafts") {
  GridDraft d(GridSpec(3, 2));
  CHECK(d.unset_edges().size() == 7);
  d.walk({1, 1}, "rrul");
  CHECK(d.unset_edges().size() == 3);
  CHECK_THROWS_AS(d.build(), Error);
  CHECK_THROWS_AS(d.walk({3, 2}, "r"), Error);
  d.arc(Cell{1, 2}, Cell{1, 1});
  d.arc(Cell{1, 2}, Cell{2, 2});
  d.arc(Cell{2, 1}, Cell{2, 2});
  const auto g = d.build();
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(5, 4));
  CHECK(d.mirrored().build().has_arc(2, 1));
}

TEST_CASE("path specs follow arcs") {
  const auto o = whirlpool(3, 3);
  const auto path = std::vector<Vertex>{0, 3, 4, 1};  // whichever way the square turns
  const bool forward = o.digraph.has_arc(0, 3);
  const std::vector<Vertex> walk = forward ? path : std::vector<Vertex>{0, 1, 4, 3};
  const PathSpec p = to_pathspec(o, walk);
  CHECK(follow(o.spec, p) == walk);
  CHECK(is_directed_path(o, p));
  CHECK_THROWS_AS(to_pathspec(o, std::vector<Vertex>(walk.rbegin(), walk.rend())), Error);
  CHECK_FALSE(is_directed_path(o, PathSpec{o.spec.cell(walk[1]), forward ? "d" : "l"}));
  CHECK_THROWS_AS(follow(o.spec, PathSpec{{1, 1}, "l"}), Error);
}

TEST_CASE("ascii rendering round-trips") {
  const auto o = construct_nm_ab(5, 4, 2, 2);
  const std::string text = render_ascii(o);
  // 4 vertex rows and 3 edge rows, each 2n-1 characters wide.
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(text.substr(0, text.find('\n')).size() == 9);
  const auto back = parse_ascii(text);
  CHECK(back.spec == o.spec);
  CHECK(back.digraph == o.digraph);
  CHECK_THROWS_AS(parse_ascii("o>o\nx x\no<o\n"), Error);
}

TEST_CASE("transposition swaps rows and columns") {
  const auto o = construct_2n(5, 3);
  const auto t = transposed(o);
  CHECK(t.spec.n() == 2);
  CHECK(t.spec.m() == 5);
  CHECK(transposed(t).digraph == o.digraph);
  CHECK(convexity_number(t.digraph).claimed == convexity_number(o.digraph).claimed);
  CHECK(t.provenance.witness->size() == o.provenance.witness->size());
}
