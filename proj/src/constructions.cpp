#include "orconv/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "orconv/solver.hpp"

namespace orconv {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

std::string range_error(const std::string& name, const std::map<std::string, int>& p) {
  std::string s = name + ": parameters out of range (";
  bool first = true;
  for (auto& [k, v] : p) {
    s += (first ? "" : ", ") + k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

bool has_arc(const GridDraft& d, Cell x, Cell y) {
  const auto& sp = d.spec();
  auto f = d.forward(sp.edge_index(sp.vertex(x), sp.vertex(y)));
  return f && *f == (sp.vertex(x) < sp.vertex(y));
}

// Orient a-b like the parallel edge pa-pb, if that one is set and a-b is not.
void copy_direction(GridDraft& d, Cell a, Cell b, Cell pa, Cell pb) {
  const auto& sp = d.spec();
  if (d.forward(sp.edge_index(sp.vertex(a), sp.vertex(b)))) return;
  if (has_arc(d, pa, pb)) d.arc(a, b);
  else if (has_arc(d, pb, pa)) d.arc(b, a);
}

GridOrientation finish(const GridDraft& d, std::string lemma, std::map<std::string, int> params, int target,
                       VertexSet witness, bool searched = false) {
  auto o = make_orientation(d, std::move(lemma), std::move(params), target, witness);
  if (searched) o.provenance.method = "search";
  return o;
}

// ---------------------------------------------------------------------------
// Checkerboard of unit squares.

void square_cycle(GridDraft& d, int i, int r, bool cw) {
  std::vector<Cell> c = {{i, r}, {i, r + 1}, {i + 1, r + 1}, {i + 1, r}, {i, r}};
  if (!cw) std::reverse(c.begin(), c.end());
  d.path(c);
}

bool corner_square(const GridSpec& s, int i, int r) {
  return (i == 1 || i == s.n() - 1) && (r == 1 || r == s.m() - 1);
}

GridDraft checkerboard(int n, int m) {
  GridDraft d(GridSpec(n, m));
  for (int i = 1; i < n; ++i)
    for (int r = 1; r < m; ++r)
      if ((i + r) % 2 == 0) square_cycle(d, i, r, (i + r) % 4 == 2);
  const auto& sp = d.spec();
  for (int i = 1; i < n; ++i) {
    if (!corner_square(sp, i, 1)) copy_direction(d, {i, 1}, {i + 1, 1}, {i, 2}, {i + 1, 2});
    if (!corner_square(sp, i, m - 1)) copy_direction(d, {i, m}, {i + 1, m}, {i, m - 1}, {i + 1, m - 1});
  }
  for (int r = 1; r < m; ++r) {
    if (!corner_square(sp, 1, r)) copy_direction(d, {1, r}, {1, r + 1}, {2, r}, {2, r + 1});
    if (!corner_square(sp, n - 1, r)) copy_direction(d, {n, r}, {n, r + 1}, {n - 1, r}, {n - 1, r + 1});
  }
  // White corner squares: the two exterior edges become a directed 2-path
  // through the corner, chosen so the square is not a directed cycle.
  struct Corner {
    int i, r;
    Cell corner, a, b;
  };
  const std::vector<Corner> corners = {{1, 1, {1, 1}, {2, 1}, {1, 2}},
                                       {n - 1, 1, {n, 1}, {n - 1, 1}, {n, 2}},
                                       {1, m - 1, {1, m}, {2, m}, {1, m - 1}},
                                       {n - 1, m - 1, {n, m}, {n - 1, m}, {n, m - 1}}};
  for (const auto& c : corners) {
    if ((c.i + c.r) % 2 == 0) continue;
    for (int into = 1; into >= 0; --into) {
      if (into) d.path({c.a, c.corner, c.b});
      else d.path({c.b, c.corner, c.a});
      std::vector<Cell> sq = {{c.i, c.r}, {c.i, c.r + 1}, {c.i + 1, c.r + 1}, {c.i + 1, c.r}, {c.i, c.r}};
      bool cw = true, ccw = true;
      for (int k = 0; k < 4; ++k) {
        cw &= has_arc(d, sq[k], sq[k + 1]);
        ccw &= has_arc(d, sq[k + 1], sq[k]);
      }
      if (!cw && !ccw) break;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Stretched checkerboard: squares grouped into bands of widths w,1,w,1,...
// (or w,1,1,1,... when only the first band is wide).

struct Bands {
  std::vector<int> start, end;  // per band id 1..count
  int count = 0;
};

Bands bands(int squares, int w, bool only_first_wide) {
  Bands b;
  b.start.push_back(0);
  b.end.push_back(0);
  int x = 1;
  for (int id = 1; x <= squares; ++id) {
    const int width = (id % 2 == 1 && (id == 1 || !only_first_wide)) ? w : 1;
    b.start.push_back(x);
    x = std::min(squares + 1, x + width);
    b.end.push_back(x - 1);
    b.count = id;
  }
  return b;
}

GridDraft stretched(int n, int m, int a, int b, bool only_first_wide) {
  GridDraft d(GridSpec(n, m));
  const auto& sp = d.spec();
  const Bands cb = bands(n - 1, a - 1, only_first_wide), rb = bands(m - 1, b - 1, only_first_wide);
  for (int I = 1; I <= cb.count; ++I)
    for (int R = 1; R <= rb.count; ++R) {
      if ((I + R) % 2) continue;
      const bool cw = (I + R) % 4 == 2;
      d.local_whirlpool_block(cb.start[I], cb.end[I] + 1, rb.start[R], rb.end[R] + 1, !cw);
    }
  // Rungs crossing white strips follow the nearest oriented rung of the strip.
  auto nearest = [&](int y, int x, bool vertical) -> int {
    int best = 1 << 20, at = -1;
    const int len = vertical ? n : m;
    for (int X = 1; X <= len; ++X) {
      if (X == x) continue;
      const int e = vertical ? sp.edge_index(sp.vertex(X, y), sp.vertex(X, y + 1))
                             : sp.edge_index(sp.vertex(y, X), sp.vertex(y + 1, X));
      if (d.forward(e) && std::abs(X - x) < best) {
        best = std::abs(X - x);
        at = X;
      }
    }
    return at;
  };
  for (int R = 2; R <= rb.count; R += 2) {
    const int y = rb.start[R];
    if (y >= m) continue;
    for (int x = 2; x <= n - 1; ++x)
      if (int X = nearest(y, x, true); X > 0) copy_direction(d, {x, y}, {x, y + 1}, {X, y}, {X, y + 1});
  }
  for (int I = 2; I <= cb.count; I += 2) {
    const int x = cb.start[I];
    if (x >= n) continue;
    for (int y = 2; y <= m - 1; ++y)
      if (int Y = nearest(x, y, false); Y > 0) copy_direction(d, {x, y}, {x + 1, y}, {x, Y}, {x + 1, Y});
  }
  // Unset exterior edges: group into runs along the outer ring. Single edges
  // copy their parallel edge; longer runs become directed paths.
  std::vector<Cell> ring;
  for (int x = 1; x < n; ++x) ring.push_back({x, 1});
  for (int y = 1; y < m; ++y) ring.push_back({n, y});
  for (int x = n; x > 1; --x) ring.push_back({x, m});
  for (int y = m; y > 1; --y) ring.push_back({1, y});
  const int L = static_cast<int>(ring.size());
  std::vector<bool> unset(L);
  for (int k = 0; k < L; ++k)
    unset[k] = !d.forward(sp.edge_index(sp.vertex(ring[k]), sp.vertex(ring[(k + 1) % L])));
  int s0 = 0;
  while (s0 < L && unset[s0]) ++s0;
  if (s0 == L) return d;
  for (int k = 1; k <= L; ++k) {
    int t = (s0 + k) % L;
    if (!unset[t]) continue;
    std::vector<Cell> run{ring[t]};
    while (unset[t]) {
      run.push_back(ring[(t + 1) % L]);
      unset[t] = false;
      t = (t + 1) % L;
    }
    if (run.size() > 2) {
      d.path(run);
      continue;
    }
    Cell p = run[0], q = run[1], dp = p, dq = q;
    if (p.j == q.j) {
      const int dj = p.j == 1 ? 1 : -1;
      dp.j += dj;
      dq.j += dj;
    } else {
      const int di = p.i == 1 ? 1 : -1;
      dp.i += di;
      dq.i += di;
    }
    copy_direction(d, p, q, dp, dq);
  }
  return d;
}

// Edges between the a x b corner block and the far side of the grid, used
// as search variables when the block touches the last column or row.
std::vector<int> strip_edges(const GridSpec& sp, int a, int b) {
  const int n = sp.n(), m = sp.m();
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
    auto [u, v] = sp.edges()[e];
    const Cell cu = sp.cell(u), cv = sp.cell(v);
    const bool col = a == n - 1 && cu.i >= a && cv.i >= a && !(cu.i == a && cv.i == a) && std::max(cu.j, cv.j) <= b;
    const bool row = b == m - 1 && cu.j >= b && cv.j >= b && !(cu.j == b && cv.j == b) && std::max(cu.i, cv.i) <= a;
    const bool corner = a == n - 1 && b == m - 1 && cu.i >= a && cv.i >= a && cu.j >= b && cv.j >= b;
    if (col || row || corner) out.push_back(e);
  }
  return out;
}

GridDraft searched_or_throw(const GridDraft& base, const std::vector<int>& free, VertexSet witness, int target,
                            const std::string& what) {
  auto found = seam_search(base, free, witness, target);
  if (!found) throw Error(what + ": seam search found no orientation");
  return *found;
}

// ---------------------------------------------------------------------------
// Complement shapes for the nm-k family.

// K = top row plus the top q cells of column n (plus (n-1)_{m-1} when fat).
// Returns the drafted orientation; the end zone near column n is left to the
// search.
GridDraft thin_l(int n, int m, int q, bool fat, VertexSet& K) {
  GridSpec sp(n, m);
  GridDraft d(sp);
  K = VertexSet();
  for (int x = 1; x <= n; ++x) K.insert(sp.vertex(x, m));
  for (int y = m - 1; y >= m - q; --y) K.insert(sp.vertex(n, y));
  if (fat) K.insert(sp.vertex(n - 1, m - 1));
  Region c;
  for (int r = 1; r <= m - 2; ++r)
    for (int i = 1; i <= n - 1; ++i) {
      bool clear = true;
      for (int di = 0; di <= 1; ++di)
        for (int dj = 0; dj <= 1; ++dj)
          if (K.contains(sp.vertex(i + di, r + dj))) clear = false;
      if (clear) c.add({i, r});
    }
  d.whirlpool(c, (m - 1) % 2 != 0);
  // Directed path along the inner side of K.
  std::vector<Cell> inner;
  const int last = fat ? n - 2 : n - 1;
  for (int x = 1; x <= last; ++x) inner.push_back({x, m - 1});
  if (fat) {
    inner.push_back({n - 2, m - 2});
    inner.push_back({n - 1, m - 2});
  }
  for (int y = fat ? m - 3 : m - 2; y >= m - q - 1; --y) inner.push_back({n - 1, y});
  d.path(inner);
  std::vector<Cell> outer;
  for (int x = 1; x <= n; ++x) outer.push_back({x, m});
  for (int y = m - 1; y >= m - q; --y) outer.push_back({n, y});
  d.path(outer);
  for (int x = 2; x <= n - 1; ++x)
    if (!(fat && x == n - 1)) d.arc(Cell{x, m}, Cell{x, m - 1});
  for (int y = m - 1; y >= m - q; --y)
    if (!(fat && y == m - 1)) d.arc(Cell{n, y}, Cell{n - 1, y});
  d.arc(Cell{1, m - 1}, Cell{1, m});
  if (fat) {
    d.arc(Cell{n - 1, m - 1}, Cell{n - 1, m});
    d.arc(Cell{n, m - 1}, Cell{n - 1, m - 1});
    d.arc(Cell{n - 1, m - 1}, Cell{n - 1, m - 2});
    d.arc(Cell{n - 1, m - 1}, Cell{n - 2, m - 1});
  }
  return d;
}

std::vector<int> end_zone(const GridSpec& sp, int q) {
  std::vector<int> out;
  const int n = sp.n(), m = sp.m();
  for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
    auto [u, v] = sp.edges()[e];
    const Cell a = sp.cell(u), b = sp.cell(v);
    if (a.i >= n - 2 && b.i >= n - 2 && a.j <= m - q && b.j <= m - q) out.push_back(e);
  }
  return out;
}

// Whirlpool everywhere, with edges whose ends are both within distance 1 of K
// left free.
std::vector<int> near_edges(const GridSpec& sp, VertexSet K) {
  auto near = [&](Cell c) {
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) {
        Cell x{c.i + di, c.j + dj};
        if (sp.contains(x) && K.contains(sp.vertex(x))) return true;
      }
    return false;
  };
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
    auto [u, v] = sp.edges()[e];
    if (near(sp.cell(u)) && near(sp.cell(v))) out.push_back(e);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

namespace {

struct SeamState {
  GridDraft d;
  const std::vector<int>& free;
  VertexSet witness;
  int target;
  long max_nodes;
  SeamSearchStats st;
  std::vector<int> in, out, undecided, side;  // side: 0 none, 1 arcs into W, 2 arcs out of W
  std::vector<std::pair<int, int>> side_undo;
  bool found = false;

  bool apply(int e, bool fwd) {
    auto [a, b] = d.spec().edges()[e];
    const Vertex u = fwd ? a : b, v = fwd ? b : a;
    d.set_forward(e, fwd);
    ++out[u];
    ++in[v];
    --undecided[u];
    --undecided[v];
    bool ok = true;
    for (Vertex x : {u, v})
      if (undecided[x] == 0 && (in[x] == 0 || out[x] == 0)) ok = false;
    // A vertex outside a convex set has all its arcs to the set pointing the
    // same way.
    if (witness.contains(u) != witness.contains(v)) {
      const Vertex x = witness.contains(u) ? v : u;
      const int dir = x == u ? 1 : 2;
      side_undo.push_back({x, side[x]});
      if (side[x] && side[x] != dir) ok = false;
      side[x] = dir;
    }
    return ok;
  }

  void undo(int e, std::size_t mark) {
    auto [a, b] = d.spec().edges()[e];
    const bool fwd = *d.forward(e);
    const Vertex u = fwd ? a : b, v = fwd ? b : a;
    --out[u];
    --in[v];
    ++undecided[u];
    ++undecided[v];
    d.clear(e);
    while (side_undo.size() > mark) {
      side[side_undo.back().first] = side_undo.back().second;
      side_undo.pop_back();
    }
  }

  void rec(std::size_t k) {
    if (found || ++st.nodes > max_nodes) return;
    if (k == free.size()) {
      ++st.leaves;
      const auto g = d.build();
      if (!is_strong(g)) return;
      if (!is_convex(IntervalTable(g), witness)) return;
      if (convexity_number(g).claimed != target) return;
      found = true;
      return;
    }
    for (int f = 0; f < 2; ++f) {
      const std::size_t mark = side_undo.size();
      if (apply(free[k], f == 1)) rec(k + 1);
      if (found) return;
      undo(free[k], mark);
    }
  }
};

}  // namespace

std::optional<GridDraft> seam_search(GridDraft draft, const std::vector<int>& free, VertexSet witness, int target,
                                     long max_nodes, SeamSearchStats* stats) {
  for (int e : free) draft.clear(e);
  SeamState s{std::move(draft), free, witness, target, max_nodes, {}, {}, {}, {}, {}, {}};
  const auto& sp = s.d.spec();
  const int n = sp.order();
  s.in.assign(n, 0);
  s.out.assign(n, 0);
  s.undecided.assign(n, 0);
  s.side.assign(n, 0);
  bool ok = true;
  for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
    auto [a, b] = sp.edges()[e];
    auto f = s.d.forward(e);
    if (!f) {
      ++s.undecided[a];
      ++s.undecided[b];
      continue;
    }
    const Vertex u = *f ? a : b, v = *f ? b : a;
    ++s.out[u];
    ++s.in[v];
    if (witness.contains(u) != witness.contains(v)) {
      const Vertex x = witness.contains(u) ? v : u;
      const int dir = x == u ? 1 : 2;
      if (s.side[x] && s.side[x] != dir) ok = false;
      s.side[x] = dir;
    }
  }
  if (ok) s.rec(0);
  if (stats) *stats = s.st;
  if (!s.found) return std::nullopt;
  return std::move(s.d);
}

GridDraft transposed(const GridDraft& d) {
  const GridSpec& sp = d.spec();
  GridDraft out(GridSpec(sp.m(), sp.n()));
  for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
    auto f = d.forward(e);
    if (!f) continue;
    auto [a, b] = sp.edges()[e];
    const Cell t = sp.cell(*f ? a : b), h = sp.cell(*f ? b : a);
    out.arc(Cell{t.j, t.i}, Cell{h.j, h.i});
  }
  return out;
}

VertexSet transposed(const GridSpec& spec, VertexSet s) {
  const GridSpec t(spec.m(), spec.n());
  VertexSet out;
  s.for_each([&](Vertex v) {
    const Cell c = spec.cell(v);
    out.insert(t.vertex(c.j, c.i));
  });
  return out;
}

GridOrientation transposed(const GridOrientation& o) {
  GridDraft d(o.spec);
  for (auto [u, v] : o.digraph.arcs()) d.arc(u, v);
  Provenance p = o.provenance;
  if (p.witness) p.witness = transposed(o.spec, *p.witness);
  auto t = make_orientation(transposed(d), p.lemma, p.params, o.target, p.witness);
  t.provenance = p;
  return t;
}

// ---------------------------------------------------------------------------
// Two and three rows.

GridOrientation construct_2n(int n, int j) {
  require(n >= 3 && j >= 2 && n / 2 <= j && j <= n - 1, range_error("2n", {{"n", n}, {"j", j}}));
  GridDraft d(GridSpec(n, 2));
  const bool flip = j % 2 == 0;
  if (2 * j >= n) {
    d.whirlpool_block(1, j, 1, 2, flip);
    d.whirlpool_block(j + 1, n, 1, 2, !flip);
    d.arc(Cell{j, 1}, Cell{j + 1, 1});
    d.arc(Cell{j + 1, 2}, Cell{j, 2});
  } else {
    // Odd n with j = n/2: a middle column joins two blocks of j columns.
    d.whirlpool_block(1, j, 1, 2, flip);
    d.whirlpool_block(j + 2, n, 1, 2, flip);
    d.arc(Cell{j + 1, 1}, Cell{j + 1, 2});
    d.arc(Cell{j + 1, 2}, Cell{j, 2});
    d.arc(Cell{j + 1, 2}, Cell{j + 2, 2});
    d.arc(Cell{j, 1}, Cell{j + 1, 1});
    d.arc(Cell{j + 2, 1}, Cell{j + 1, 1});
  }
  return finish(d, "2n", {{"n", n}, {"j", j}}, 2 * j, d.spec().block(1, j, 1, 2));
}

GridOrientation construct_3n_3j(int n, int j) {
  require(n >= 3 && j >= 2 && j <= n - 1, range_error("3n-3j", {{"n", n}, {"j", j}}));
  GridDraft d(GridSpec(n, 3));
  if (j == n - 1) {
    d.local_whirlpool_block(1, n - 1, 1, 3, n % 2 == 1);
    d.arc(Cell{n - 1, 3}, Cell{n, 3});
    d.arc(Cell{n - 1, 1}, Cell{n, 1});
    d.arc(Cell{n, 2}, Cell{n - 1, 2});
    d.arc(Cell{n, 1}, Cell{n, 2});
    d.arc(Cell{n, 3}, Cell{n, 2});
  } else {
    d.local_whirlpool_block(1, j - 2, 1, 3, j % 2 == 1);
    d.local_whirlpool_block(j + 1, n, 1, 3, false);
    d.path({{j, 3}, {j - 1, 3}, {j - 1, 2}, {j - 1, 1}, {j, 1}, {j, 2}, {j, 3}});
    if (j >= 3) {
      d.arc(Cell{j - 2, 3}, Cell{j - 1, 3});
      d.arc(Cell{j - 1, 2}, Cell{j - 2, 2});
      d.arc(Cell{j - 2, 1}, Cell{j - 1, 1});
    }
    d.arc(Cell{j, 2}, Cell{j - 1, 2});
    d.arc(Cell{j, 3}, Cell{j + 1, 3});
    d.arc(Cell{j, 2}, Cell{j + 1, 2});
    d.arc(Cell{j + 1, 1}, Cell{j, 1});
  }
  return finish(d, "3n-3j", {{"n", n}, {"j", j}}, 3 * j, d.spec().block(1, j, 1, 3));
}

GridOrientation construct_3n_3j2(int n, int j) {
  require(n >= 4 && j >= 2 && j <= n - 2, range_error("3n-3j+2", {{"n", n}, {"j", j}}));
  GridDraft d(GridSpec(n, 3));
  const bool even = j % 2 == 0;
  const Region head = Region::rectangle(1, j + 1, 1, 3) - Region(std::set<Square>{{j, 2}});
  if (n / 2 <= j && j <= n - 3) {
    d.whirlpool(head, false);
    d.local_whirlpool_block(j + 2, n, 1, 3, !even);
    if (even) {
      d.arc(Cell{j + 1, 3}, Cell{j, 3});
      d.arc(Cell{j + 1, 3}, Cell{j + 1, 2});
      d.arc(Cell{j + 2, 3}, Cell{j + 1, 3});
      d.arc(Cell{j + 2, 2}, Cell{j + 1, 2});
      d.arc(Cell{j + 1, 1}, Cell{j + 2, 1});
    } else {
      d.arc(Cell{j, 3}, Cell{j + 1, 3});
      d.arc(Cell{j + 1, 2}, Cell{j + 1, 3});
      d.arc(Cell{j + 1, 3}, Cell{j + 2, 3});
      d.arc(Cell{j + 1, 2}, Cell{j + 2, 2});
      d.arc(Cell{j + 2, 1}, Cell{j + 1, 1});
    }
  } else {
    d.whirlpool(head, even);
    d.path({{j, 3}, {j + 1, 3}, {j + 2, 3}, {j + 2, 2}, {j + 2, 1}, {j + 1, 1}});
    d.arc(Cell{j + 1, 2}, Cell{j + 1, 3});
    d.arc(Cell{j + 1, 2}, Cell{j + 2, 2});
    if (j != n - 2) {
      d.local_whirlpool_block(j + 3, n, 1, 3, !even);
      d.arc(Cell{j + 2, 1}, Cell{j + 3, 1});
      d.arc(Cell{j + 2, 2}, Cell{j + 3, 2});
      d.arc(Cell{j + 3, 3}, Cell{j + 2, 3});
    }
  }
  return finish(d, "3n-3j+2", {{"n", n}, {"j", j}}, 3 * j + 2, head.vertices(d.spec()));
}

GridOrientation construct_3n_3j1(int n, int j) {
  require(n >= 5 && j >= 3 && j <= n - 2, range_error("3n-3j+1", {{"n", n}, {"j", j}}));
  GridDraft d(GridSpec(n, 3));
  const auto& sp = d.spec();
  const bool flip = j % 2 == 0;
  const Region head = Region::rectangle(1, j + 1, 1, 2) + Region::rectangle(1, j - 1, 2, 3);
  if (j == n - 2) {
    d.whirlpool_block(1, j - 1, 1, 3, flip);
    d.path({{j - 1, 1}, {j, 1}, {j + 1, 1}, {j + 1, 2}, {j, 2}, {j - 1, 2}});
    d.arc(Cell{j, 2}, Cell{j, 1});
    d.path({{j + 1, 1}, {j + 2, 1}, {j + 2, 2}, {j + 2, 3}, {j + 1, 3}, {j, 3}, {j - 1, 3}});
    d.path({{j + 1, 3}, {j + 1, 2}, {j + 2, 2}});
    d.arc(Cell{j, 3}, Cell{j, 2});
  } else {
    d.whirlpool(head, flip);
    auto tail = [&](Cell c) { return c.i >= j + 2 && !(c.i == j + 2 && c.j == 1); };
    for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e) {
      const Edge ed = sp.edges()[e];
      if (tail(sp.cell(ed.first)) && tail(sp.cell(ed.second))) d.set_forward(e, whirlpool_forward(sp, ed) != flip);
    }
    d.path({{j + 1, 3}, {j + 1, 2}, {j + 2, 2}, {j + 2, 1}, {j + 1, 1}});
    d.path({{j + 2, 3}, {j + 1, 3}, {j, 3}, {j - 1, 3}});
    if (j == n - 3) d.arc(Cell{j + 3, 1}, Cell{j + 2, 1});
    else d.arc(Cell{j + 2, 1}, Cell{j + 3, 1});
    d.arc(Cell{j, 3}, Cell{j, 2});
  }
  return finish(d, "3n-3j+1", {{"n", n}, {"j", j}}, 3 * j + 1, head.vertices(sp));
}

GridOrientation construct_3n_con4(int n) {
  require(n >= 3, range_error("3n-con4", {{"n", n}}));
  auto d = checkerboard(n, 3);
  return finish(d, "3n-con4", {{"n", n}}, 4, d.spec().block(1, 2, 1, 2));
}

// ---------------------------------------------------------------------------
// General grids.

GridOrientation gadget_H() {
  auto d = checkerboard(4, 4);
  return finish(d, "gadget-H", {}, 4, d.spec().block(1, 2, 1, 2));
}

GridOrientation construct_nm_con4(int n, int m) {
  require(n >= 4 && m >= 4, range_error("nm-con4", {{"n", n}, {"m", m}}));
  auto d = checkerboard(n, m);
  return finish(d, "nm-con4", {{"n", n}, {"m", m}}, 4, d.spec().block(1, 2, 1, 2));
}

GridOrientation construct_nm_ab(int n, int m, int a, int b) {
  const std::map<std::string, int> p{{"n", n}, {"m", m}, {"a", a}, {"b", b}};
  require(n >= 4 && m >= 4 && a >= 2 && b >= 2 && a <= n - 1 && b <= m - 1, range_error("nm-ab", p));
  if (a * b == 4) {
    auto o = construct_nm_con4(n, m);
    o.provenance.lemma = "nm-ab";
    o.provenance.params = p;
    return o;
  }
  GridDraft d = stretched(n, m, a, b, false);
  const VertexSet w = d.spec().block(1, a, 1, b);
  if (a < n - 1 && b < m - 1) return finish(d, "nm-ab", p, a * b, w);
  d = searched_or_throw(d, strip_edges(d.spec(), a, b), w, a * b, "nm-ab");
  return finish(d, "nm-ab", p, a * b, w, true);
}

GridOrientation construct_nm_nb(int n, int m, int b) {
  const std::map<std::string, int> p{{"n", n}, {"m", m}, {"b", b}};
  require(n >= 4 && m >= 4 && 2 * b >= m && b <= m - 1, range_error("nm-nb", p));
  GridSpec sp(n, m);
  GridDraft d(sp);
  d.whirlpool_block(1, n, 1, b);
  if (b == m - 1) {
    // Both top fibers run right; the extra down arc at column n keeps the
    // end of fiber m-1 from being a sink.
    if (!has_arc(d, Cell{1, m - 1}, Cell{2, m - 1})) d.whirlpool_block(1, n, 1, b, true);
    std::vector<Cell> low, high;
    for (int x = 1; x <= n; ++x) {
      low.push_back({x, m - 1});
      high.push_back({x, m});
      d.arc(Cell{x, m}, Cell{x, m - 1});
    }
    d.path(low);
    d.path(high);
    d.arc(Cell{1, m - 1}, Cell{1, m});
    d.arc(Cell{n, m - 1}, Cell{n, m - 2});
  } else {
    d.whirlpool_block(1, n, b + 1, m, true);
    for (int x = 1; x <= n; ++x) {
      if (x % 2 == 1) d.arc(Cell{x, b}, Cell{x, b + 1});
      else d.arc(Cell{x, b + 1}, Cell{x, b});
    }
  }
  return finish(d, "nm-nb", p, n * b, sp.block(1, n, 1, b));
}

GridOrientation construct_nm_ab_kl(int n, int m, int a, int b, int k, int l) {
  const std::map<std::string, int> p{{"n", n}, {"m", m}, {"a", a}, {"b", b}, {"k", k}, {"l", l}};
  require(n >= 4 && m >= 4 && a >= 3 && b >= 3 && a <= n - 1 && b <= m - 1 && k >= 0 && l >= 0 && k <= a - 2 &&
              l <= b - 2,
          range_error("nm-ab-kl", p));
  if (k == 0 && l == 0) {
    auto o = construct_nm_ab(n, m, a, b);
    o.provenance.lemma = "nm-ab-kl";
    o.provenance.params = p;
    return o;
  }
  if (k + l >= std::min(a, b)) {
    // Same value from a smaller block with k + l < min(a, b).
    const int target = a * b - k - l;
    for (int a2 = a; a2 >= 3; --a2)
      for (int b2 = b; b2 >= 3; --b2)
        for (int k2 = 0; k2 <= a2 - 2; ++k2) {
          const int l2 = a2 * b2 - target - k2;
          if (l2 < 0 || l2 > b2 - 2 || k2 + l2 >= std::min(a2, b2) || (a2 == a && b2 == b)) continue;
          auto o = construct_nm_ab_kl(n, m, a2, b2, k2, l2);
          o.provenance.params = p;
          return o;
        }
  }
  GridDraft d = stretched(n, m, a, b, true);
  const auto& sp = d.spec();
  std::set<Square> removed;
  for (int x = 1; x <= k; ++x) removed.insert({x, b - 1});
  for (int y = 1; y <= l; ++y) removed.insert({a - 1, y});
  Region R;
  for (int x = 1; x < a; ++x)
    for (int y = 1; y < b; ++y)
      if (!removed.count({x, y})) R.add({x, y});
  const auto kept = R.edges(sp);
  const std::set<Edge> keep(kept.begin(), kept.end());
  for (Edge e : Region::rectangle(1, a, 1, b).edges(sp)) {
    if (keep.count(e)) continue;
    const Cell lo = sp.cell(e.first), hi = sp.cell(e.second);
    if (lo.j == hi.j) d.arc(lo, hi);  // right
    else d.arc(hi, lo);               // down
  }
  const VertexSet w = R.vertices(sp);
  const int target = a * b - k - l;
  if (a < n - 1 && b < m - 1) return finish(d, "nm-ab-kl", p, target, w);
  // Widen the free set step by step: the strips, then edges at the removed
  // cells, then their neighbourhood, then every edge leaving the witness near
  // the complement.
  const VertexSet cut = sp.block(1, a, 1, b) - w;
  std::set<int> free;
  for (int e : strip_edges(sp, a, b)) free.insert(e);
  for (int stage = 0; stage < 4; ++stage) {
    if (stage == 1)
      for (int e = 0; e < static_cast<int>(sp.edges().size()); ++e)
        if (cut.contains(sp.edges()[e].first) || cut.contains(sp.edges()[e].second)) free.insert(e);
    if (stage == 2)
      for (int e : near_edges(sp, cut)) free.insert(e);
    if (stage == 3)
      for (int e : near_edges(sp, VertexSet::full(n * m) - w))
        if (w.contains(sp.edges()[e].first) != w.contains(sp.edges()[e].second)) free.insert(e);
    if (auto found = seam_search(d, {free.begin(), free.end()}, w, target, 3'000'000))
      return finish(*found, "nm-ab-kl", p, target, w, true);
  }
  throw Error("nm-ab-kl: seam search found no orientation");
}

GridOrientation construct_nm_high(int n, int m, int k) {
  const std::map<std::string, int> p{{"n", n}, {"m", m}, {"k", k}};
  const int lo = std::min(n, m), hi = std::max(n, m);
  require(lo >= 4 && ((k >= 6 && k <= 2 * hi - 1) || (k == 5 && lo == 4)), range_error("nm-high", p));
  auto relabel = [&](GridOrientation o) {
    o.provenance.lemma = "nm-high";
    o.provenance.params = p;
    return o;
  };
  if (n < m) {
    auto o = transposed(construct_nm_high(m, n, k));
    return relabel(o);
  }
  // From here m <= n.
  if (k == m) return relabel(transposed(construct_nm_nb(m, n, n - 1)));
  if (k >= n + m - 1) return relabel(construct_nm_ab_kl(n, m, n - 1, m - 1, k - (n + m - 1), 0));
  GridSpec sp(n, m);
  if (k > m) {
    // Thin L along the short side: built on the transposed grid.
    VertexSet K;
    const bool fat = k == n + m - 2;
    GridDraft t = thin_l(m, n, fat ? n - 3 : k - m, fat, K);
    const VertexSet w = VertexSet::full(n * m) - K;
    t = searched_or_throw(t, end_zone(t.spec(), fat ? n - 3 : k - m), w, n * m - k, "nm-high");
    auto o = transposed(finish(t, "nm-high", p, n * m - k, w, true));
    return relabel(o);
  }
  // k < m: a two-row block in the top right corner, odd k adding one cell below.
  VertexSet K;
  for (int x = n - k / 2 + 1; x <= n; ++x)
    for (int y = m - 1; y <= m; ++y) K.insert(sp.vertex(x, y));
  if (k % 2) K.insert(sp.vertex(n, m - 2));
  const VertexSet w = VertexSet::full(n * m) - K;
  const auto free = near_edges(sp, K);
  for (bool anti : {false, true}) {
    GridDraft d(sp);
    d.whirlpool(Region::whole(sp), anti);
    if (auto found = seam_search(d, free, w, n * m - k)) return finish(*found, "nm-high", p, n * m - k, w, true);
  }
  throw Error("nm-high: seam search found no orientation");
}

// ---------------------------------------------------------------------------

void certify_orientation(GridOrientation& o, int exhaustive_limit) {
  if (!is_strong(o.digraph)) throw RefutedClaim(o.provenance.lemma + ": orientation is not strong", std::nullopt);
  if (o.spec.order() <= exhaustive_limit) {
    auto cert = certify(o.digraph, o.target, Evidence::exhaustive_max);
    o.provenance.evidence = cert.evidence;
    if (!o.provenance.witness) o.provenance.witness = cert.witness;
    return;
  }
  std::optional<VertexSet> hint = o.provenance.witness;
  auto cert = certify(o.digraph, o.target, Evidence::membership_only, hint);
  o.provenance.evidence = cert.evidence;
  o.provenance.witness = cert.witness;
}

namespace {

using Builder = std::function<GridOrientation(const std::map<std::string, int>&)>;

int param(const std::map<std::string, int>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error("missing parameter --" + key);
  return it->second;
}

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r = {
      {"whirlpool", [](auto& p) { return whirlpool(param(p, "n"), param(p, "m"), p.count("anti") && p.at("anti")); }},
      {"2n", [](auto& p) { return construct_2n(param(p, "n"), param(p, "j")); }},
      {"3n-3j", [](auto& p) { return construct_3n_3j(param(p, "n"), param(p, "j")); }},
      {"3n-3j+2", [](auto& p) { return construct_3n_3j2(param(p, "n"), param(p, "j")); }},
      {"3n-3j+1", [](auto& p) { return construct_3n_3j1(param(p, "n"), param(p, "j")); }},
      {"3n-con4", [](auto& p) { return construct_3n_con4(param(p, "n")); }},
      {"gadget-H", [](auto&) { return gadget_H(); }},
      {"nm-con4", [](auto& p) { return construct_nm_con4(param(p, "n"), param(p, "m")); }},
      {"nm-ab", [](auto& p) { return construct_nm_ab(param(p, "n"), param(p, "m"), param(p, "a"), param(p, "b")); }},
      {"nm-nb", [](auto& p) { return construct_nm_nb(param(p, "n"), param(p, "m"), param(p, "b")); }},
      {"nm-ab-kl",
       [](auto& p) {
         return construct_nm_ab_kl(param(p, "n"), param(p, "m"), param(p, "a"), param(p, "b"), param(p, "k"),
                                   param(p, "l"));
       }},
      {"nm-high", [](auto& p) { return construct_nm_high(param(p, "n"), param(p, "m"), param(p, "k")); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> constructor_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : registry()) out.push_back(k);
  return out;
}

GridOrientation construct(const std::string& name, const std::map<std::string, int>& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown construction '" + name + "'");
  auto p = params;
  const bool flip = p.count("transpose") && p.at("transpose");
  p.erase("transpose");
  if (!flip) return it->second(p);
  auto o = transposed(it->second(p));
  o.provenance.params["transpose"] = 1;
  return o;
}

std::map<int, std::vector<ConstructorCall>> constructive_plan(int n, int m) {
  std::map<int, std::vector<ConstructorCall>> plan;
  auto add = [&](int v, std::string name, std::map<std::string, int> p) {
    auto& calls = plan[v];
    for (const auto& c : calls)
      if (c.name == name && c.params == p) return;
    calls.push_back({std::move(name), std::move(p)});
  };
  if (n < 2 || m < 2) return plan;
  add(1, "whirlpool", {{"n", n}, {"m", m}});
  const int lo = std::min(n, m), hi = std::max(n, m);
  const bool swap = m > n;  // constructors below want the long side first
  auto oriented = [&](std::map<std::string, int> p) {
    if (swap) p["transpose"] = p.count("transpose") ? 1 - p["transpose"] : 1;
    return p;
  };
  if (lo == 2) {
    for (int j = std::max(2, hi / 2); j <= hi - 1; ++j) add(2 * j, "2n", oriented({{"n", hi}, {"j", j}}));
    return plan;
  }
  if (lo == 3) {
    if (hi >= 3) add(4, "3n-con4", oriented({{"n", hi}}));
    for (int j = 2; j <= hi - 1; ++j) add(3 * j, "3n-3j", oriented({{"n", hi}, {"j", j}}));
    for (int j = 2; j <= hi - 2; ++j) add(3 * j + 2, "3n-3j+2", oriented({{"n", hi}, {"j", j}}));
    for (int j = 3; j <= hi - 2; ++j) add(3 * j + 1, "3n-3j+1", oriented({{"n", hi}, {"j", j}}));
    return plan;
  }
  const int N = hi, M = lo;
  add(4, "nm-con4", oriented({{"n", N}, {"m", M}}));
  // Interior products first: they need no search.
  for (int a = 2; a <= N - 2; ++a)
    for (int b = 2; b <= M - 2; ++b) add(a * b, "nm-ab", oriented({{"n", N}, {"m", M}, {"a", a}, {"b", b}}));
  for (int b = (M + 1) / 2; b <= M - 1; ++b) add(N * b, "nm-nb", oriented({{"n", N}, {"m", M}, {"b", b}}));
  for (int b = (N + 1) / 2; b <= N - 1; ++b)
    add(M * b, "nm-nb", oriented({{"n", M}, {"m", N}, {"b", b}, {"transpose", 1}}));
  for (int a = 3; a <= N - 2; ++a)
    for (int b = 3; b <= M - 2; ++b)
      for (int k = 0; k <= a - 2; ++k)
        for (int l = 0; l <= b - 2; ++l)
          add(a * b - k - l, "nm-ab-kl", oriented({{"n", N}, {"m", M}, {"a", a}, {"b", b}, {"k", k}, {"l", l}}));
  for (int k = M == 4 ? 5 : 6; k <= 2 * N - 1; ++k)
    if (N * M - k >= 1) add(N * M - k, "nm-high", oriented({{"n", N}, {"m", M}, {"k", k}}));
  for (int a = 2; a <= N - 1; ++a)
    for (int b = 2; b <= M - 1; ++b) add(a * b, "nm-ab", oriented({{"n", N}, {"m", M}, {"a", a}, {"b", b}}));
  for (int a = 3; a <= N - 1; ++a)
    for (int b = 3; b <= M - 1; ++b)
      for (int k = 0; k <= a - 2; ++k)
        for (int l = 0; l <= b - 2; ++l)
          add(a * b - k - l, "nm-ab-kl", oriented({{"n", N}, {"m", M}, {"a", a}, {"b", b}, {"k", k}, {"l", l}}));
  return plan;
}

GridOrientation construct_value(int n, int m, int value) {
  const auto plan = constructive_plan(n, m);
  auto it = plan.find(value);
  if (it == plan.end()) throw Error("no construction reaches " + std::to_string(value));
  std::string failures;
  for (const auto& call : it->second) {
    try {
      return construct(call.name, call.params);
    } catch (const Error& e) {
      failures += std::string("; ") + e.what();
    }
  }
  throw Error("every construction for " + std::to_string(value) + " failed" + failures);
}

}  // namespace orconv
