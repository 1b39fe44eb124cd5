#include "orconv/grid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orconv {

GridSpec::GridSpec(int n, int m) : n_(n), m_(m) {
  if (n < 2 || m < 2) throw Error("grid dimensions must be at least 2x2");
  if (n * m > kMaxOrder) throw Error("grid has more than " + std::to_string(kMaxOrder) + " vertices");
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i < n; ++i) edges_.emplace_back(vertex(i, j), vertex(i + 1, j));
  for (int j = 1; j < m; ++j)
    for (int i = 1; i <= n; ++i) edges_.emplace_back(vertex(i, j), vertex(i, j + 1));
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) edge_ids_[edges_[e]] = e;
}

Vertex GridSpec::vertex(int i, int j) const {
  if (!contains({i, j}))
    throw Error("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside the grid");
  return (j - 1) * n_ + (i - 1);
}

std::string GridSpec::label(Vertex v) const {
  const Cell c = cell(v);
  return std::to_string(c.i) + "_" + std::to_string(c.j);
}

int GridSpec::edge_index(Vertex a, Vertex b) const {
  auto it = edge_ids_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_ids_.end()) throw Error(label(a) + " and " + label(b) + " are not adjacent");
  return it->second;
}

Graph GridSpec::graph() const { return Graph(order(), edges_); }

VertexSet GridSpec::block(int i0, int i1, int j0, int j1) const {
  VertexSet s;
  for (int j = std::max(j0, 1); j <= std::min(j1, m_); ++j)
    for (int i = std::max(i0, 1); i <= std::min(i1, n_); ++i) s.insert(vertex(i, j));
  return s;
}

Region Region::rectangle(int i0, int i1, int j0, int j1) {
  Region r;
  for (int i = i0; i < i1; ++i)
    for (int j = j0; j < j1; ++j) r.add({i, j});
  return r;
}

Region& Region::operator+=(const Region& o) {
  squares_.insert(o.squares_.begin(), o.squares_.end());
  return *this;
}

Region Region::operator-(const Region& o) const {
  Region r;
  for (const auto& s : squares_)
    if (!o.squares_.count(s)) r.add(s);
  return r;
}

bool Region::dual_connected() const {
  if (squares_.empty()) return false;
  std::set<Square> seen{*squares_.begin()};
  std::vector<Square> stack{*squares_.begin()};
  while (!stack.empty()) {
    Square s = stack.back();
    stack.pop_back();
    for (Square t : {Square{s.i + 1, s.j}, Square{s.i - 1, s.j}, Square{s.i, s.j + 1}, Square{s.i, s.j - 1}})
      if (squares_.count(t) && seen.insert(t).second) stack.push_back(t);
  }
  return seen.size() == squares_.size();
}

VertexSet Region::vertices(const GridSpec& spec) const {
  VertexSet s;
  for (auto [i, j] : squares_) s |= spec.block(i, i + 1, j, j + 1);
  return s;
}

std::vector<Edge> Region::edges(const GridSpec& spec) const {
  std::set<Edge> out;
  for (auto [i, j] : squares_) {
    const Vertex a = spec.vertex(i, j), b = spec.vertex(i + 1, j), c = spec.vertex(i + 1, j + 1),
                 d = spec.vertex(i, j + 1);
    for (auto [x, y] : {Edge{a, b}, Edge{d, c}, Edge{a, d}, Edge{b, c}}) out.emplace(std::min(x, y), std::max(x, y));
  }
  return {out.begin(), out.end()};
}

bool whirlpool_forward(const GridSpec& spec, Edge e) {
  const Cell a = spec.cell(std::min(e.first, e.second));
  const Cell b = spec.cell(std::max(e.first, e.second));
  const bool same_parity = (a.i - a.j) % 2 == 0;
  if (a.j == b.j) return !same_parity;  // horizontal: ((i+1)_j, i_j) iff i ≡ j
  return same_parity;                   // vertical: (i_j, i_{j+1}) iff i ≡ j
}

GridDraft::GridDraft(GridSpec spec) : spec_(std::move(spec)), dir_(spec_.edges().size()) {}

void GridDraft::arc(Vertex a, Vertex b) { dir_[spec_.edge_index(a, b)] = a < b; }

void GridDraft::arc(Cell a, Cell b) { arc(spec_.vertex(a), spec_.vertex(b)); }

void GridDraft::path(const std::vector<Cell>& cells) {
  for (std::size_t k = 0; k + 1 < cells.size(); ++k) arc(cells[k], cells[k + 1]);
}

namespace {

Cell step(Cell c, char move) {
  switch (move) {
    case 'u': return {c.i, c.j + 1};
    case 'd': return {c.i, c.j - 1};
    case 'l': return {c.i - 1, c.j};
    case 'r': return {c.i + 1, c.j};
  }
  throw Error(std::string("unknown move '") + move + "'");
}

}  // namespace

void GridDraft::walk(Cell start, const std::string& moves) {
  Cell c = start;
  for (char mv : moves) {
    Cell next = step(c, mv);
    arc(c, next);
    c = next;
  }
}

void GridDraft::whirlpool(const Region& r, bool anti) {
  if (!r.dual_connected()) throw Error("region's interior dual is not connected");
  for (Edge e : r.edges(spec_)) dir_[spec_.edge_index(e.first, e.second)] = whirlpool_forward(spec_, e) != anti;
}

void GridDraft::whirlpool_block(int i0, int i1, int j0, int j1, bool anti) {
  if (i0 > i1 || j0 > j1) return;
  const VertexSet inside = spec_.block(i0, i1, j0, j1);
  for (std::size_t e = 0; e < dir_.size(); ++e) {
    const Edge edge = spec_.edges()[e];
    if (inside.contains(edge.first) && inside.contains(edge.second))
      dir_[e] = whirlpool_forward(spec_, edge) != anti;
  }
}

void GridDraft::local_whirlpool_block(int i0, int i1, int j0, int j1, bool anti) {
  const bool shifted = ((i0 - j0) % 2 + 2) % 2 == 1;
  whirlpool_block(i0, i1, j0, j1, anti != shifted);
}

void GridDraft::reverse_all() {
  for (auto& d : dir_)
    if (d) d = !*d;
}

GridDraft GridDraft::mirrored() const {
  GridDraft out(spec_);
  for (std::size_t e = 0; e < dir_.size(); ++e) {
    if (!dir_[e]) continue;
    auto [a, b] = spec_.edges()[e];
    Vertex tail = *dir_[e] ? a : b, head = *dir_[e] ? b : a;
    Cell t = spec_.cell(tail), h = spec_.cell(head);
    out.arc(Cell{spec_.n() + 1 - t.i, t.j}, Cell{spec_.n() + 1 - h.i, h.j});
  }
  return out;
}

bool GridDraft::is_set(Edge e) const { return dir_[spec_.edge_index(e.first, e.second)].has_value(); }

std::vector<int> GridDraft::unset_edges() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(dir_.size()); ++e)
    if (!dir_[e]) out.push_back(e);
  return out;
}

OrientedGraph GridDraft::build() const {
  OrientedGraph g(spec_.order());
  for (std::size_t e = 0; e < dir_.size(); ++e) {
    auto [a, b] = spec_.edges()[e];
    if (!dir_[e]) throw Error("edge " + spec_.label(a) + "-" + spec_.label(b) + " is not oriented");
    if (*dir_[e]) g.add_arc(a, b); else g.add_arc(b, a);
  }
  for (Vertex v = 0; v < g.order(); ++v) g.set_label(v, spec_.label(v));
  return g;
}

GridOrientation make_orientation(const GridDraft& d, std::string lemma, std::map<std::string, int> params,
                                 int target, std::optional<VertexSet> witness) {
  Provenance p;
  p.lemma = std::move(lemma);
  p.params = std::move(params);
  p.witness = witness;
  return {d.spec(), d.build(), std::move(p), target};
}

GridOrientation orientation_from_digraph(const GridSpec& spec, const OrientedGraph& g) {
  if (g.order() != spec.order()) throw Error("digraph order does not match the grid");
  GridDraft d(spec);
  for (auto [u, v] : g.arcs()) d.arc(u, v);
  if (g.arc_count() != spec.edge_count()) throw Error("digraph is not an orientation of the grid");
  return make_orientation(d, "", {}, 0);
}

GridSpec grid(int n, int m) { return GridSpec(n, m); }

GridOrientation whirlpool(int n, int m, bool anti) {
  GridDraft d(GridSpec(n, m));
  d.whirlpool(Region::whole(d.spec()), anti);
  return make_orientation(d, anti ? "anti-whirlpool" : "whirlpool", {{"n", n}, {"m", m}}, 1);
}

OrientedGraph induced(const OrientedGraph& g, VertexSet s) {
  const auto vs = s.to_vector();
  std::vector<int> local(g.order(), -1);
  for (std::size_t k = 0; k < vs.size(); ++k) local[vs[k]] = static_cast<int>(k);
  OrientedGraph out(static_cast<int>(vs.size()));
  for (auto [u, v] : g.arcs())
    if (local[u] >= 0 && local[v] >= 0) out.add_arc(local[u], local[v]);
  for (std::size_t k = 0; k < vs.size(); ++k) out.set_label(static_cast<int>(k), g.name(vs[k]));
  return out;
}

RegionOrientation whirlpool(const GridSpec& spec, const Region& region, bool anti) {
  if (!region.dual_connected()) throw Error("region's interior dual is not connected");
  OrientedGraph g(spec.order());
  for (Edge e : region.edges(spec)) {
    if (whirlpool_forward(spec, e) != anti) g.add_arc(e.first, e.second);
    else g.add_arc(e.second, e.first);
  }
  for (Vertex v = 0; v < spec.order(); ++v) g.set_label(v, spec.label(v));
  const VertexSet vs = region.vertices(spec);
  return {induced(g, vs), vs.to_vector()};
}

PathSpec to_pathspec(const GridOrientation& o, const std::vector<Vertex>& path) {
  if (path.empty()) throw Error("empty path");
  PathSpec p{o.spec.cell(path.front()), ""};
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!o.digraph.has_arc(path[k], path[k + 1]))
      throw Error("no arc " + o.spec.label(path[k]) + "->" + o.spec.label(path[k + 1]));
    const Cell a = o.spec.cell(path[k]), b = o.spec.cell(path[k + 1]);
    p.moves += b.j > a.j ? 'u' : b.j < a.j ? 'd' : b.i > a.i ? 'r' : 'l';
  }
  return p;
}

std::vector<Vertex> follow(const GridSpec& spec, const PathSpec& p) {
  std::vector<Vertex> out{spec.vertex(p.start)};
  Cell c = p.start;
  for (char mv : p.moves) {
    c = step(c, mv);
    out.push_back(spec.vertex(c));
  }
  return out;
}

bool is_directed_path(const GridOrientation& o, const PathSpec& p) {
  const auto vs = follow(o.spec, p);
  VertexSet seen;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (seen.contains(vs[k])) return false;
    seen.insert(vs[k]);
    if (k + 1 < vs.size() && !o.digraph.has_arc(vs[k], vs[k + 1])) return false;
  }
  return true;
}

namespace {

std::string render(const GridSpec& spec, const std::function<std::optional<bool>(Vertex, Vertex)>& dir) {
  // dir(a, b) with a < b: true when oriented a -> b.
  std::ostringstream os;
  for (int j = spec.m(); j >= 1; --j) {
    for (int i = 1; i <= spec.n(); ++i) {
      os << 'o';
      if (i < spec.n()) {
        auto d = dir(spec.vertex(i, j), spec.vertex(i + 1, j));
        os << (!d ? '.' : *d ? '>' : '<');
      }
    }
    os << '\n';
    if (j == 1) break;
    for (int i = 1; i <= spec.n(); ++i) {
      auto d = dir(spec.vertex(i, j - 1), spec.vertex(i, j));
      os << (!d ? '.' : *d ? '^' : 'v');
      if (i < spec.n()) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const GridOrientation& o) {
  return render(o.spec, [&](Vertex a, Vertex b) -> std::optional<bool> {
    if (o.digraph.has_arc(a, b)) return true;
    if (o.digraph.has_arc(b, a)) return false;
    return std::nullopt;
  });
}

std::string render_ascii(const GridDraft& d) {
  return render(d.spec(), [&](Vertex a, Vertex b) { return d.forward(d.spec().edge_index(a, b)); });
}

GridOrientation parse_ascii(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 3 || lines.size() % 2 == 0) throw Error("ascii grid: expected an odd number (>= 3) of lines");
  const int m = static_cast<int>(lines.size() + 1) / 2;
  const int width = static_cast<int>(lines[0].size());
  if (width < 3 || width % 2 == 0) throw Error("ascii grid: malformed vertex row");
  const int n = (width + 1) / 2;
  GridSpec spec(n, m);
  GridDraft d(spec);
  for (int r = 0; r < static_cast<int>(lines.size()); ++r) {
    const std::string& line = lines[r];
    if (static_cast<int>(line.size()) != width) throw Error("ascii grid: ragged line " + std::to_string(r + 1));
    if (r % 2 == 0) {
      const int j = m - r / 2;
      for (int i = 1; i <= n; ++i) {
        if (line[2 * (i - 1)] != 'o') throw Error("ascii grid: expected 'o' on line " + std::to_string(r + 1));
        if (i == n) break;
        const char c = line[2 * i - 1];
        if (c == '>') d.arc(Cell{i, j}, Cell{i + 1, j});
        else if (c == '<') d.arc(Cell{i + 1, j}, Cell{i, j});
        else throw Error(std::string("ascii grid: bad horizontal glyph '") + c + "'");
      }
    } else {
      const int j = m - r / 2 - 1;  // edge between rows j and j+1
      for (int i = 1; i <= n; ++i) {
        const char c = line[2 * (i - 1)];
        if (c == '^') d.arc(Cell{i, j}, Cell{i, j + 1});
        else if (c == 'v') d.arc(Cell{i, j + 1}, Cell{i, j});
        else throw Error(std::string("ascii grid: bad vertical glyph '") + c + "'");
      }
    }
  }
  return make_orientation(d, "", {}, 0);
}

}  // namespace orconv
