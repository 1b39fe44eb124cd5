#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orconv/digraph.hpp"

namespace orconv {

struct CliqueInstance {
  Graph g;
  int k = 3;
};

struct Gadget {
  std::vector<Vertex> cycle;  // directed cycle in arc order, cycle[0] = x
  Vertex x = 0;
  Vertex y = 0;
};

struct ReductionInstance {
  OrientedGraph digraph;
  int k_prime = 0;
  int gadget_half = 3;
  std::vector<Gadget> gadgets;  // indexed by vertex of G
  std::vector<Vertex> z;        // directed path z_1 .. z_{h+1}
};

/// Clique -> oriented convexity number: a directed 2h-cycle per vertex with
/// antipodal x_u, y_u, arcs x_u -> y_v and x_v -> y_u per edge, and a directed
/// path z with x_u -> z_1 and z_last -> y_u for every u.
ReductionInstance reduce(const CliqueInstance& inst, int gadget_half = 3);

/// Clique number by brute force (order <= 20).
int clique_number(const Graph& g);
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct ClaimReport {
  bool gadget_closure = true;   // a convex set meeting a gadget (|C| >= 2) contains it
  bool z_forces_all = true;     // a convex set with some z_i and |C| >= 2 is everything
  bool far_forces_all = true;   // gadgets at distance >= 2 in G force everything
  bool cliques_convex = true;   // union of gadgets of any clique is convex
  std::vector<std::string> counterexamples;
  long convex_sets_checked = 0;
  bool ok() const { return gadget_closure && z_forces_all && far_forces_all && cliques_convex; }
};
/// Checks the four structural claims over every convex set of the digraph
/// (enumerated with the closure solver) plus every clique of G.
ClaimReport verify_claims(const ReductionInstance& r, const Graph& g);

struct CorrespondenceReport {
  int omega = 0;
  int con = 0;
  int expected_con = 0;  // 2h * omega
  bool relation_holds = false;
  bool decision_agrees = false;  // omega >= k  <=>  con >= k'
  bool ok() const { return relation_holds && decision_agrees; }
};
CorrespondenceReport correspondence_check(const CliqueInstance& inst, const ReductionInstance& r);

/// Undirected graph readers: JSON {"n": N, "edges": [[u,v],...]} or DIMACS-like
/// text ("p edge N M" then "e u v" lines, 1-based).
Graph graph_from_json(const std::string& text);
Graph graph_from_dimacs(const std::string& text);
/// Picks the reader from the content.
Graph parse_graph(const std::string& text);

}  // namespace orconv
