#pragma once

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orconv/vertex_set.hpp"

namespace orconv {

/// Raised on violated preconditions and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph; edges are stored with u < v in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  void add_edge(Vertex u, Vertex v);
  bool connected() const;
  /// True when no edge is a bridge (and the graph is connected).
  bool two_edge_connected() const;

 private:
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

/// An orientation of a simple graph: no loops, at most one arc per vertex pair.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int order);
  OrientedGraph(int order, const std::vector<Arc>& arcs);

  int order() const { return static_cast<int>(out_.size()); }
  int arc_count() const;
  VertexSet out(Vertex v) const { return out_[v]; }
  VertexSet in(Vertex v) const { return in_[v]; }
  VertexSet neighbors(Vertex v) const { return out_[v] | in_[v]; }
  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
  int out_degree(Vertex v) const { return out_[v].size(); }
  int in_degree(Vertex v) const { return in_[v].size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Throws if the arc is a loop, out of range, or its reverse is present.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);
  /// Replaces (u,v) by (v,u). Requires (u,v) present.
  void flip_arc(Vertex u, Vertex v);

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;
  Graph underlying() const;

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  void set_label(Vertex v, std::string name) { labels_[v] = std::move(name); }
  std::string name(Vertex v) const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::map<Vertex, std::string> labels_;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<int> distances(const OrientedGraph& g, Vertex source);
/// BFS distances *to* `target` along arcs.
std::vector<int> distances_to(const OrientedGraph& g, Vertex target);

bool is_strong(const OrientedGraph& g);
/// Strong connectivity of the subdigraph induced by `s` (s nonempty).
bool is_strong_on(const OrientedGraph& g, VertexSet s);
/// Connectivity of the underlying graph induced on `s`; the empty set counts as connected.
bool is_connected_on(const OrientedGraph& g, VertexSet s);

enum class VertexKind { source, sink, transitive, ordinary };
const char* to_string(VertexKind k);

/// Standard convention: N+(v) = {x : (v,x) arc}, N-(v) = {x : (x,v) arc}.
VertexKind classify_vertex(const OrientedGraph& g, Vertex v);

/// Arcs with tail in `s` and head outside. `s` must be a proper nonempty subset.
std::vector<Arc> out_boundary(const OrientedGraph& g, VertexSet s);
/// Arcs with head in `s` and tail outside.
std::vector<Arc> in_boundary(const OrientedGraph& g, VertexSet s);

OrientedGraph reverse(const OrientedGraph& g);

/// Length of a shortest directed cycle, or kUnreachable if acyclic.
int directed_girth(const OrientedGraph& g);
bool is_bipartite(const Graph& g);

}  // namespace orconv
