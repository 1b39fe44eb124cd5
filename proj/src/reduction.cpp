#include "orconv/reduction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "orconv/convexity.hpp"
#include "orconv/solver.hpp"

namespace orconv {

ReductionInstance reduce(const CliqueInstance& inst, int gadget_half) {
  const Graph& g = inst.g;
  if (inst.k < 3) throw Error("reduction needs k >= 3");
  if (gadget_half < 3) throw Error("gadget_half must be at least 3");
  if (g.order() == 0 || !g.connected()) throw Error("reduction needs a connected graph");
  const int h = gadget_half, cyc = 2 * h;
  const int order = cyc * g.order() + h + 1;
  if (order > kMaxOrder) throw Error("reduction would have " + std::to_string(order) + " vertices; limit is 128");
  ReductionInstance r;
  r.gadget_half = h;
  r.k_prime = cyc * inst.k;
  r.digraph = OrientedGraph(order);
  auto& d = r.digraph;
  for (Vertex u = 0; u < g.order(); ++u) {
    Gadget gd;
    for (int t = 0; t < cyc; ++t) gd.cycle.push_back(cyc * u + t);
    for (int t = 0; t < cyc; ++t) d.add_arc(gd.cycle[t], gd.cycle[(t + 1) % cyc]);
    gd.x = gd.cycle[0];
    gd.y = gd.cycle[h];
    for (int t = 0; t < cyc; ++t) {
      std::string name = "h" + std::to_string(u) + "." + std::to_string(t);
      if (t == 0) name = "x" + std::to_string(u);
      if (t == h) name = "y" + std::to_string(u);
      d.set_label(gd.cycle[t], name);
    }
    r.gadgets.push_back(gd);
  }
  for (auto [u, v] : g.edges()) {
    d.add_arc(r.gadgets[u].x, r.gadgets[v].y);
    d.add_arc(r.gadgets[v].x, r.gadgets[u].y);
  }
  for (int t = 0; t <= h; ++t) {
    r.z.push_back(cyc * g.order() + t);
    d.set_label(r.z.back(), "z" + std::to_string(t + 1));
  }
  for (int t = 0; t < h; ++t) d.add_arc(r.z[t], r.z[t + 1]);
  for (const auto& gd : r.gadgets) {
    d.add_arc(gd.x, r.z.front());
    d.add_arc(r.z.back(), gd.y);
  }
  return r;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  // Bron-Kerbosch with pivoting.
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    const Vertex pivot = (p | x).first();
    VertexSet cand = p - g.neighbors(pivot);
    cand.for_each([&](Vertex v) {
      VertexSet r2 = r;
      r2.insert(v);
      bk(r2, p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    });
  };
  bk(VertexSet(), VertexSet::full(g.order()), VertexSet());
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

namespace {

std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  // Each clique is generated once by adding vertices in increasing order.
  std::function<void(VertexSet, Vertex)> rec = [&](VertexSet c, Vertex next) {
    for (Vertex v = next; v < g.order(); ++v) {
      bool ok = true;
      c.for_each([&](Vertex u) { ok = ok && g.adjacent(u, v); });
      if (!ok) continue;
      VertexSet c2 = c;
      c2.insert(v);
      out.push_back(c2);
      rec(c2, v + 1);
    }
  };
  rec(VertexSet(), 0);
  return out;
}

std::vector<int> graph_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> q{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    g.neighbors(q[i]).for_each([&](Vertex w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[q[i]] + 1;
        q.push_back(w);
      }
    });
  return dist;
}

std::string describe(const OrientedGraph& d, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    out += (first ? "" : ",") + d.name(v);
    first = false;
  });
  return out + "}";
}

}  // namespace

ClaimReport verify_claims(const ReductionInstance& r, const Graph& g) {
  ClaimReport rep;
  const auto& d = r.digraph;
  const VertexSet all = d.vertices();
  std::vector<VertexSet> gadget_sets;
  for (const auto& gd : r.gadgets) {
    VertexSet s;
    for (Vertex v : gd.cycle) s.insert(v);
    gadget_sets.push_back(s);
  }
  VertexSet zset;
  for (Vertex v : r.z) zset.insert(v);
  std::vector<std::vector<int>> dist;
  for (Vertex u = 0; u < g.order(); ++u) dist.push_back(graph_distances(g, u));

  auto note = [&](const std::string& claim, VertexSet c) {
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(claim + ": " + describe(d, c));
  };
  for_each_convex_set(d, [&](VertexSet c) {
    ++rep.convex_sets_checked;
    if (c.size() < 2 || c == all) return true;
    for (std::size_t u = 0; u < gadget_sets.size(); ++u)
      if (!(c & gadget_sets[u]).empty() && !gadget_sets[u].subset_of(c)) {
        rep.gadget_closure = false;
        note("gadget closure", c);
      }
    if (!(c & zset).empty()) {
      rep.z_forces_all = false;
      note("z vertex in a proper convex set", c);
    }
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (dist[u][v] >= 2 && !(c & gadget_sets[u]).empty() && !(c & gadget_sets[v]).empty()) {
          rep.far_forces_all = false;
          note("far gadgets in a proper convex set", c);
        }
    return true;
  });
  const IntervalTable t(d);
  for (VertexSet s : all_cliques(g)) {
    VertexSet c;
    s.for_each([&](Vertex u) { c |= gadget_sets[u]; });
    if (!is_convex(t, c)) {
      rep.cliques_convex = false;
      note("clique union not convex", c);
    }
  }
  return rep;
}

CorrespondenceReport correspondence_check(const CliqueInstance& inst, const ReductionInstance& r) {
  CorrespondenceReport rep;
  rep.omega = clique_number(inst.g);
  rep.con = convexity_number(r.digraph).claimed;
  rep.expected_con = 2 * r.gadget_half * rep.omega;
  rep.relation_holds = rep.con == rep.expected_con;
  rep.decision_agrees = (rep.omega >= inst.k) == (rep.con >= r.k_prime);
  return rep;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("edges")) throw Error("graph JSON needs an \"edges\" array");
  int n = j.value("n", 0);
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair");
    const int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0) throw Error("negative vertex in graph JSON");
    n = std::max({n, u + 1, v + 1});
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  if (n > kMaxOrder) throw Error("graph has more than 128 vertices");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw Error("loop in graph JSON");
    if (!g.adjacent(u, v)) g.add_edge(u, v);
  }
  return g;
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int m = 0;
      if (!(ls >> kind >> n >> m) || n < 0 || n > kMaxOrder) throw Error("bad DIMACS problem line: " + line);
      g = Graph(n);
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!g || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
        throw Error("bad DIMACS edge line: " + line);
      if (!g->adjacent(u - 1, v - 1)) g->add_edge(u - 1, v - 1);
    } else {
      throw Error("unknown DIMACS line: " + line);
    }
  }
  if (!g) throw Error("DIMACS input has no problem line");
  return *g;
}

Graph parse_graph(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
  return graph_from_dimacs(text);
}

}  // namespace orconv
