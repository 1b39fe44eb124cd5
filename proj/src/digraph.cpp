#include "orconv/digraph.hpp"

#include <algorithm>
#include <deque>

namespace orconv {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder)
    throw Error("order must be in 1.." + std::to_string(kMaxOrder) + ", got " + std::to_string(order));
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  adj_.resize(order);
}

Graph::Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw Error("edge endpoint out of range");
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) throw Error("duplicate edge");
  adj_[u].insert(v);
  adj_[v].insert(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::connected() const {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= adj_[v]; });
    frontier = next - seen;
    seen |= next;
  }
  return seen == VertexSet::full(order());
}

bool Graph::two_edge_connected() const {
  if (!connected()) return false;
  if (order() == 1) return true;
  // Tarjan bridge detection, iterative.
  const int n = order();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v, parent;
    std::vector<Vertex> nbrs;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, adj_[0].to_vector(), 0});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.nbrs.size()) {
      Vertex w = f.nbrs[f.next++];
      if (w == f.parent) continue;
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, adj_[w].to_vector(), 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      Vertex v = f.v, p = f.parent;
      stack.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) return false;
      }
    }
  }
  return true;
}

OrientedGraph::OrientedGraph(int order) {
  check_order(order);
  out_.resize(order);
  in_.resize(order);
}

OrientedGraph::OrientedGraph(int order, const std::vector<Arc>& arcs) : OrientedGraph(order) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

void OrientedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw Error("vertex " + std::to_string(v) + " out of range");
}

int OrientedGraph::arc_count() const {
  int c = 0;
  for (VertexSet s : out_) c += s.size();
  return c;
}

void OrientedGraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (out_[v].contains(u))
    throw Error("arc (" + std::to_string(u) + "," + std::to_string(v) + ") would create a 2-cycle");
  out_[u].insert(v);
  in_[v].insert(u);
}

void OrientedGraph::remove_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  out_[u].erase(v);
  in_[v].erase(u);
}

void OrientedGraph::flip_arc(Vertex u, Vertex v) {
  if (!has_arc(u, v)) throw Error("flip of missing arc");
  remove_arc(u, v);
  add_arc(v, u);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < order(); ++u) out_[u].for_each([&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

Graph OrientedGraph::underlying() const {
  Graph g(order());
  for (auto [u, v] : arcs()) g.add_edge(u, v);
  return g;
}

std::string OrientedGraph::name(Vertex v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

namespace {

std::vector<int> bfs(const std::vector<VertexSet>& rows, Vertex start) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> dist(n, kUnreachable);
  dist[start] = 0;
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= rows[v]; });
    next -= seen;
    next.for_each([&](Vertex v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

VertexSet reach_within(const OrientedGraph& g, Vertex start, VertexSet s, bool forward) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= forward ? g.out(v) : g.in(v); });
    next &= s;
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

std::vector<int> distances(const OrientedGraph& g, Vertex source) {
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.out(v);
  return bfs(rows, source);
}

std::vector<int> distances_to(const OrientedGraph& g, Vertex target) {
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.in(v);
  return bfs(rows, target);
}

bool is_strong(const OrientedGraph& g) { return is_strong_on(g, g.vertices()); }

bool is_strong_on(const OrientedGraph& g, VertexSet s) {
  if (s.empty()) throw Error("strong connectivity of an empty vertex set");
  Vertex r = s.first();
  return reach_within(g, r, s, true) == s && reach_within(g, r, s, false) == s;
}

bool is_connected_on(const OrientedGraph& g, VertexSet s) {
  if (s.empty()) return true;
  VertexSet seen = VertexSet::single(s.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= s;
    frontier = next - seen;
    seen |= next;
  }
  return seen == s;
}

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::source: return "source";
    case VertexKind::sink: return "sink";
    case VertexKind::transitive: return "transitive";
    case VertexKind::ordinary: return "ordinary";
  }
  return "?";
}

VertexKind classify_vertex(const OrientedGraph& g, Vertex v) {
  const VertexSet outs = g.out(v), ins = g.in(v);
  if (ins.empty() && !outs.empty()) return VertexKind::source;
  if (outs.empty() && !ins.empty()) return VertexKind::sink;
  if (outs.empty() || ins.empty()) return VertexKind::ordinary;
  bool transitive = true;
  ins.for_each([&](Vertex w) { transitive = transitive && outs.subset_of(g.out(w)); });
  return transitive ? VertexKind::transitive : VertexKind::ordinary;
}

namespace {

void check_proper(const OrientedGraph& g, VertexSet s) {
  if (s.empty() || s == g.vertices()) throw Error("boundary of an empty or full vertex set");
  if (!s.subset_of(g.vertices())) throw Error("vertex set exceeds graph order");
}

}  // namespace

std::vector<Arc> out_boundary(const OrientedGraph& g, VertexSet s) {
  check_proper(g, s);
  std::vector<Arc> out;
  s.for_each([&](Vertex u) { (g.out(u) - s).for_each([&](Vertex v) { out.emplace_back(u, v); }); });
  return out;
}

std::vector<Arc> in_boundary(const OrientedGraph& g, VertexSet s) {
  check_proper(g, s);
  std::vector<Arc> out;
  for (auto [u, v] : g.arcs())
    if (!s.contains(u) && s.contains(v)) out.emplace_back(u, v);
  return out;
}

OrientedGraph reverse(const OrientedGraph& g) {
  OrientedGraph r(g.order());
  for (auto [u, v] : g.arcs()) r.add_arc(v, u);
  for (const auto& [v, name] : g.labels()) r.set_label(v, name);
  return r;
}

int directed_girth(const OrientedGraph& g) {
  int best = kUnreachable;
  for (Vertex v = 0; v < g.order(); ++v) {
    // Shortest cycle through v = 1 + min over in-neighbours w of d(v, w).
    auto d = distances(g, v);
    g.in(v).for_each([&](Vertex w) {
      if (d[w] != kUnreachable) best = std::min(best, d[w] + 1);
    });
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      bool ok = true;
      g.neighbors(v).for_each([&](Vertex w) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push_back(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace orconv
