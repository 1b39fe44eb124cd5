#pragma once

#include <vector>

#include "orconv/digraph.hpp"

namespace orconv {

/// Geodesic intervals of an oriented graph.
///
/// `entry(u, v)` holds every vertex on some directed uv-geodesic (empty when v
/// is unreachable from u). Convexity uses the two-way interval
/// `entry(u, v) | entry(v, u)`, which is also precomputed.
class IntervalTable {
 public:
  explicit IntervalTable(const OrientedGraph& g);

  int order() const { return n_; }
  VertexSet entry(Vertex u, Vertex v) const { return one_way_[idx(u, v)]; }
  VertexSet two_way(Vertex u, Vertex v) const { return two_way_[idx(u, v)]; }
  int distance(Vertex u, Vertex v) const { return dist_[idx(u, v)]; }

 private:
  std::size_t idx(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<int> dist_;
  std::vector<VertexSet> one_way_;
  std::vector<VertexSet> two_way_;
};

inline IntervalTable interval_table(const OrientedGraph& g) { return IntervalTable(g); }

/// Least convex superset of `seed`. Throws on an empty seed.
VertexSet hull(const IntervalTable& t, VertexSet seed);

/// hull(closed ∪ {v}) for a set that is already convex (or empty).
/// Returns early once the growing set covers `stop`; the result then covers
/// `stop` but may fall short of the true hull. Pass the full vertex set to get
/// the exact hull.
VertexSet extend_hull(const IntervalTable& t, VertexSet closed, Vertex v, VertexSet stop);

/// Throws on an empty set.
bool is_convex(const IntervalTable& t, VertexSet s);

}  // namespace orconv
