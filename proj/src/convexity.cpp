#include "orconv/convexity.hpp"

namespace orconv {

IntervalTable::IntervalTable(const OrientedGraph& g)
    : n_(g.order()),
      dist_(static_cast<std::size_t>(n_) * n_, kUnreachable),
      one_way_(static_cast<std::size_t>(n_) * n_),
      two_way_(static_cast<std::size_t>(n_) * n_) {
  std::vector<std::vector<int>> from(n_), to(n_);
  for (Vertex v = 0; v < n_; ++v) {
    from[v] = distances(g, v);
    to[v] = distances_to(g, v);
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      const int d = from[u][v];
      dist_[idx(u, v)] = d;
      if (d == kUnreachable) continue;
      VertexSet s;
      for (Vertex w = 0; w < n_; ++w) {
        const int a = from[u][w], b = to[v][w];
        if (a != kUnreachable && b != kUnreachable && a + b == d) s.insert(w);
      }
      one_way_[idx(u, v)] = s;
    }
  }
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v) two_way_[idx(u, v)] = one_way_[idx(u, v)] | one_way_[idx(v, u)];
}

VertexSet extend_hull(const IntervalTable& t, VertexSet closed, Vertex v, VertexSet stop) {
  VertexSet set = closed;
  VertexSet pending = VertexSet::single(v) - closed;
  // Each newly added vertex is paired with everything already in the set;
  // pairs inside `closed` need no work since it is convex.
  while (!pending.empty()) {
    const Vertex w = pending.first();
    pending.erase(w);
    set.insert(w);
    VertexSet add;
    set.for_each([&](Vertex u) { add |= t.two_way(w, u); });
    add -= set;
    pending |= add;
    if (stop.subset_of(set | pending)) return set | pending;
  }
  return set;
}

VertexSet hull(const IntervalTable& t, VertexSet seed) {
  if (seed.empty()) throw Error("empty hull seed");
  VertexSet set;
  const VertexSet full = VertexSet::full(t.order());
  seed.for_each([&](Vertex v) {
    if (!set.contains(v)) set = extend_hull(t, set, v, full);
  });
  return set;
}

bool is_convex(const IntervalTable& t, VertexSet s) {
  if (s.empty()) throw Error("convexity of an empty set");
  const auto vs = s.to_vector();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!t.two_way(vs[a], vs[b]).subset_of(s)) return false;
  return true;
}

}  // namespace orconv
