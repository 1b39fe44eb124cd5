#pragma once

// Test-only reference implementations. They deliberately avoid the library's
// interval table, hull closure and search code so they can check it.

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <vector>

#include "orconv/digraph.hpp"

namespace oracle {

using orconv::OrientedGraph;
using orconv::Vertex;
using orconv::VertexSet;

inline constexpr int kInf = 1 << 20;

/// Floyd-Warshall distance matrix.
inline std::vector<std::vector<int>> all_pairs(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.arcs()) d[u][v] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Vertices on some shortest u->v path, found by enumerating every simple
/// directed path from u to v.
inline std::vector<bool> geodesic_vertices_by_paths(const OrientedGraph& g, Vertex u, Vertex v) {
  const int n = g.order();
  std::vector<bool> on(n, false);
  int best = kInf;
  std::vector<Vertex> path{u};
  std::vector<std::vector<Vertex>> shortest;
  std::vector<bool> used(n, false);
  used[u] = true;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == v) {
      const int len = static_cast<int>(path.size()) - 1;
      if (len < best) {
        best = len;
        shortest.clear();
      }
      if (len == best) shortest.push_back(path);
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (!g.has_arc(x, y) || used[y]) continue;
      used[y] = true;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      used[y] = false;
    }
  };
  dfs(u);
  for (const auto& p : shortest)
    for (Vertex w : p) on[w] = true;
  return on;
}

/// Convexity straight from the definition with a Floyd-Warshall matrix.
inline bool convex_by_definition(const std::vector<std::vector<int>>& d, VertexSet s) {
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u) {
    if (!s.contains(u)) continue;
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v) || d[u][v] >= kInf) continue;
      for (int w = 0; w < n; ++w)
        if (!s.contains(w) && d[u][w] + d[w][v] == d[u][v]) return false;
    }
  }
  return true;
}

/// Maximum proper convex set size over all 2^n subsets.
inline int brute_force_con(const OrientedGraph& g) {
  const auto d = all_pairs(g);
  const int n = g.order();
  int best = 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    const VertexSet set(s);
    if (set.size() > best && convex_by_definition(d, set)) best = set.size();
  }
  return best;
}

/// Smallest convex superset by repeated subset test (exponential).
inline VertexSet brute_force_hull(const OrientedGraph& g, VertexSet seed) {
  const auto d = all_pairs(g);
  const int n = g.order();
  VertexSet best = VertexSet::full(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const VertexSet set(s);
    if (seed.subset_of(set) && set.size() < best.size() && convex_by_definition(d, set)) best = set;
  }
  return best;
}

/// Random orientation of a random connected graph on n vertices.
inline OrientedGraph random_oriented(std::mt19937& rng, int n, double extra_edge_p) {
  OrientedGraph g(n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::bernoulli_distribution extra(extra_edge_p);
  auto add = [&](Vertex a, Vertex b) {
    if (g.has_arc(a, b) || g.has_arc(b, a)) return;
    if (coin(rng)) g.add_arc(a, b); else g.add_arc(b, a);
  };
  for (Vertex v = 1; v < n; ++v) add(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (extra(rng)) add(a, b);
  return g;
}

/// Every orientation of an undirected edge list.
inline std::vector<OrientedGraph> all_orientations(int n, const std::vector<orconv::Edge>& edges) {
  std::vector<OrientedGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    OrientedGraph g(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if ((mask >> e) & 1U) g.add_arc(b, a); else g.add_arc(a, b);
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline OrientedGraph directed_cycle(int n) {
  OrientedGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n);
  return g;
}

inline OrientedGraph directed_path(int n) {
  OrientedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_arc(v, v + 1);
  return g;
}

inline OrientedGraph transitive_triangle() { return OrientedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// Strong connectivity straight from the distance matrix.
inline bool strong_by_distances(const OrientedGraph& g) {
  for (const auto& row : all_pairs(g))
    for (int x : row)
      if (x >= kInf) return false;
  return true;
}

/// Grid edges listed from coordinates: vertex (i,j) (1-based column, row) is
/// (j-1)*n + (i-1); horizontal edges row by row, then vertical ones.
inline std::vector<orconv::Edge> grid_edges(int n, int m) {
  std::vector<orconv::Edge> out;
  auto id = [n](int i, int j) { return (j - 1) * n + (i - 1); };
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i < n; ++i) out.push_back({id(i, j), id(i + 1, j)});
  for (int j = 1; j < m; ++j)
    for (int i = 1; i <= n; ++i) out.push_back({id(i, j), id(i, j + 1)});
  return out;
}

/// Strong convexity spectrum by brute force: every orientation, strong check
/// by distances, con by scanning all subsets.
inline std::vector<int> brute_force_strong_spectrum(int n, const std::vector<orconv::Edge>& edges) {
  std::vector<int> out;
  for (const auto& g : all_orientations(n, edges)) {
    if (!strong_by_distances(g)) continue;
    const int c = brute_force_con(g);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest clique by checking every vertex subset.
inline int brute_force_clique(const orconv::Graph& g) {
  int best = 0;
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace oracle
