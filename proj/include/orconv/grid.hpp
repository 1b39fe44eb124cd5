#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orconv/digraph.hpp"
#include "orconv/solver.hpp"

namespace orconv {

/// Grid coordinate: column i in 1..n (rightward), row j in 1..m (upward).
struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The n x m grid P_n □ P_m with vertex index (j-1)*n + (i-1).
class GridSpec {
 public:
  GridSpec(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int order() const { return n_ * m_; }
  int edge_count() const { return n_ * (m_ - 1) + m_ * (n_ - 1); }

  bool contains(Cell c) const { return c.i >= 1 && c.i <= n_ && c.j >= 1 && c.j <= m_; }
  Vertex vertex(int i, int j) const;
  Vertex vertex(Cell c) const { return vertex(c.i, c.j); }
  Cell cell(Vertex v) const { return {v % n_ + 1, v / n_ + 1}; }
  std::string label(Vertex v) const;

  /// Edges in a fixed order: horizontal edges row by row, then vertical ones.
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(Vertex a, Vertex b) const;
  Graph graph() const;

  /// Vertices with column in [i0,i1] and row in [j0,j1].
  VertexSet block(int i0, int i1, int j0, int j1) const;
  VertexSet column(int i) const { return block(i, i, 1, m_); }
  VertexSet row(int j) const { return block(1, n_, j, j); }

  friend bool operator==(const GridSpec& a, const GridSpec& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  int n_, m_;
  std::vector<Edge> edges_;
  std::map<std::pair<Vertex, Vertex>, int> edge_ids_;
};

/// A unit square of the grid, named by its lower-left corner.
using Square = Cell;

/// A set of unit squares.
class Region {
 public:
  Region() = default;
  explicit Region(std::set<Square> squares) : squares_(std::move(squares)) {}
  /// Squares with lower-left corner columns [i0,i1) and rows [j0,j1).
  static Region rectangle(int i0, int i1, int j0, int j1);
  /// All squares of a grid.
  static Region whole(const GridSpec& spec) { return rectangle(1, spec.n(), 1, spec.m()); }

  const std::set<Square>& squares() const { return squares_; }
  bool empty() const { return squares_.empty(); }
  void add(Square s) { squares_.insert(s); }
  Region& operator+=(const Region& o);
  Region operator+(const Region& o) const { Region r = *this; r += o; return r; }
  Region operator-(const Region& o) const;

  /// Face adjacency (sharing an edge) among the squares is connected.
  bool dual_connected() const;
  VertexSet vertices(const GridSpec& spec) const;
  /// Grid edges on the boundary of some square of the region.
  std::vector<Edge> edges(const GridSpec& spec) const;

 private:
  std::set<Square> squares_;
};

/// Direction the global parity rule gives to a grid edge: true when the arc
/// goes from the lower-index endpoint to the higher one.
bool whirlpool_forward(const GridSpec& spec, Edge e);

/// Which construction produced an orientation, and how its target was checked.
struct Provenance {
  std::string lemma;
  std::map<std::string, int> params;
  std::string method = "construction";  // "construction" | "search"
  std::optional<VertexSet> witness;     // intended maximum convex set
  std::optional<Evidence> evidence;     // set once certified
};

/// A complete orientation of a grid with the convexity number it should have.
struct GridOrientation {
  GridSpec spec;
  OrientedGraph digraph;
  Provenance provenance;
  int target = 0;
};

/// Partial orientation used while assembling constructions.
class GridDraft {
 public:
  explicit GridDraft(GridSpec spec);

  const GridSpec& spec() const { return spec_; }

  /// Orients edge a–b as (a,b); overrides any previous direction.
  void arc(Cell a, Cell b);
  void arc(Vertex a, Vertex b);
  /// Orients a directed path through consecutive adjacent cells.
  void path(const std::vector<Cell>& cells);
  /// Orients a walk given by a start cell and a move string over {u,d,l,r}.
  void walk(Cell start, const std::string& moves);

  /// Applies the whirlpool rule (or its reversal) to every edge of the region.
  void whirlpool(const Region& r, bool anti = false);
  /// Applies the whirlpool rule to every edge inside columns [i0,i1] and rows
  /// [j0,j1]. Degenerate blocks (a single column or row) are allowed; an empty
  /// range is a no-op.
  void whirlpool_block(int i0, int i1, int j0, int j1, bool anti = false);
  /// Same as whirlpool_block but with the rule read in block-local
  /// coordinates, so the block's lower-left square is always a clockwise cycle
  /// (counter-clockwise when `anti`).
  void local_whirlpool_block(int i0, int i1, int j0, int j1, bool anti = false);

  /// Reverses every oriented edge.
  void reverse_all();
  /// Mirror image left↔right (column i becomes n+1-i).
  GridDraft mirrored() const;

  bool is_set(Edge e) const;
  std::optional<bool> forward(int edge_index) const { return dir_[edge_index]; }
  void set_forward(int edge_index, bool fwd) { dir_[edge_index] = fwd; }
  void clear(int edge_index) { dir_[edge_index].reset(); }
  std::vector<int> unset_edges() const;
  bool complete() const { return unset_edges().empty(); }

  /// Throws unless every edge is oriented.
  OrientedGraph build() const;

 private:
  GridSpec spec_;
  std::vector<std::optional<bool>> dir_;
};

GridOrientation make_orientation(const GridDraft& d, std::string lemma,
                                 std::map<std::string, int> params, int target,
                                 std::optional<VertexSet> witness = std::nullopt);

/// Builds a grid orientation from an explicit digraph; throws unless the
/// digraph orients every grid edge exactly once.
GridOrientation orientation_from_digraph(const GridSpec& spec, const OrientedGraph& g);

/// The underlying grid graph.
GridSpec grid(int n, int m);

/// Whirlpool on the whole grid (con = 1).
GridOrientation whirlpool(int n, int m, bool anti = false);

/// Whirlpool on a region of a larger grid: the returned digraph lives on the
/// region's vertices, relabelled in increasing grid-index order.
struct RegionOrientation {
  OrientedGraph digraph;
  std::vector<Vertex> grid_vertex;  // local index -> grid index
};
RegionOrientation whirlpool(const GridSpec& spec, const Region& region, bool anti = false);

/// Subdigraph induced by `s`, relabelled in increasing index order.
OrientedGraph induced(const OrientedGraph& g, VertexSet s);

/// Move sequence over {u,d,l,r}.
struct PathSpec {
  Cell start;
  std::string moves;
  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

/// Encodes a vertex path as moves; every step must follow an arc of `o`.
PathSpec to_pathspec(const GridOrientation& o, const std::vector<Vertex>& path);
/// Cells visited by a path spec; throws if it leaves the grid.
std::vector<Vertex> follow(const GridSpec& spec, const PathSpec& p);
/// True when the path spec is a directed path of the digraph.
bool is_directed_path(const GridOrientation& o, const PathSpec& p);

/// ASCII drawing: rows top to bottom, 'o' vertices, '>' '<' on horizontal
/// edges, '^' 'v' on vertical edges, '.' for unoriented edges.
std::string render_ascii(const GridOrientation& o);
std::string render_ascii(const GridDraft& d);
/// Inverse of render_ascii; the result has empty provenance and target 0.
GridOrientation parse_ascii(const std::string& text);

}  // namespace orconv
