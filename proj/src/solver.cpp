#include "orconv/solver.hpp"

#include <algorithm>

namespace orconv {

const char* to_string(Evidence e) {
  return e == Evidence::exhaustive_max ? "exhaustive-max" : "membership-only";
}

Evidence evidence_from_string(const std::string& s) {
  if (s == "exhaustive-max") return Evidence::exhaustive_max;
  if (s == "membership-only") return Evidence::membership_only;
  throw Error("unknown evidence kind '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

void require_solvable(const OrientedGraph& g) {
  if (g.order() < 2) throw Error("trivial digraph");
  if (!is_connected_on(g, g.vertices())) throw Error("digraph is not connected");
}

// Close-by-one enumeration of the hull closure system. Every convex set is
// produced exactly once as hull(C ∪ {i}) with no new element below i.
class ClosureSearch {
 public:
  explicit ClosureSearch(const OrientedGraph& g)
      : table_(g), n_(g.order()), full_(VertexSet::full(g.order())) {}

  // Maximum proper convex set, numerically least among ties.
  std::pair<int, VertexSet> maximum() {
    best_size_ = 0;
    best_ = VertexSet{};
    descend_max(VertexSet{}, 0);
    return {best_size_, best_};
  }

  std::optional<VertexSet> at_least(int k) {
    target_ = k;
    found_.reset();
    descend_at_least(VertexSet{}, 0);
    return found_;
  }

  void visit_all(const std::function<bool(VertexSet)>& visit) {
    stopped_ = false;
    descend_all(VertexSet{}, 0, visit);
  }

 private:
  int free_above(VertexSet d, Vertex i) const {
    return (full_ - VertexSet::below(i + 1) - d).size();
  }

  void descend_max(VertexSet c, Vertex start) {
    for (Vertex i = start; i < n_; ++i) {
      if (c.contains(i)) continue;
      const VertexSet d = extend_hull(table_, c, i, full_);
      if (d == full_) continue;
      if (!((d - c) & VertexSet::below(i)).empty()) continue;
      const int size = d.size();
      if (size > best_size_ || (size == best_size_ && d < best_)) {
        best_size_ = size;
        best_ = d;
      }
      // Descendants are supersets of d, hence numerically no smaller.
      const int bound = size + free_above(d, i);
      if (bound > best_size_ || (bound == best_size_ && d < best_)) descend_max(d, i + 1);
    }
  }

  bool descend_at_least(VertexSet c, Vertex start) {
    for (Vertex i = start; i < n_; ++i) {
      if (c.contains(i)) continue;
      const VertexSet d = extend_hull(table_, c, i, full_);
      if (d == full_) continue;
      if (!((d - c) & VertexSet::below(i)).empty()) continue;
      if (d.size() >= target_) {
        found_ = d;
        return true;
      }
      if (d.size() + free_above(d, i) >= target_ && descend_at_least(d, i + 1)) return true;
    }
    return false;
  }

  void descend_all(VertexSet c, Vertex start, const std::function<bool(VertexSet)>& visit) {
    for (Vertex i = start; i < n_ && !stopped_; ++i) {
      if (c.contains(i)) continue;
      const VertexSet d = extend_hull(table_, c, i, full_);
      if (!((d - c) & VertexSet::below(i)).empty()) continue;
      if (!visit(d)) {
        stopped_ = true;
        return;
      }
      descend_all(d, i + 1, visit);
    }
  }

  IntervalTable table_;
  int n_;
  VertexSet full_;
  int best_size_ = 0;
  VertexSet best_;
  int target_ = 0;
  std::optional<VertexSet> found_;
  bool stopped_ = false;
};

// Scans subsets by decreasing size, numerically increasing within a size, so
// the first convex hit is the answer. A maximum convex set is maximal, so its
// complement is connected; in a strong digraph it also induces a strong
// subdigraph once it has two or more vertices.
std::pair<int, VertexSet> subset_scan(const OrientedGraph& g) {
  const int n = g.order();
  const IntervalTable table(g);
  const VertexSet full = g.vertices();
  const bool strong = is_strong(g);
  for (int k = n - 1; k >= 1; --k) {
    // Gosper's hack: next larger integer with the same popcount.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      const VertexSet cand(s);
      const bool plausible = (!strong || k < 2 || is_strong_on(g, cand)) &&
                             is_connected_on(g, full - cand);
      if (plausible && is_convex(table, cand)) return {k, cand};
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {0, VertexSet{}};  // unreachable for n >= 2: singletons are convex
}

}  // namespace

ConvexityCertificate convexity_number(const OrientedGraph& g, SolverRegime regime) {
  require_solvable(g);
  const auto t0 = Clock::now();
  if (regime == SolverRegime::automatic)
    regime = g.order() <= kSubsetScanMaxOrder ? SolverRegime::subset_scan
                                              : SolverRegime::closure_enumeration;
  if (regime == SolverRegime::subset_scan && g.order() > 24)
    throw Error("subset scan is limited to order 24");
  auto [size, witness] =
      regime == SolverRegime::subset_scan ? subset_scan(g) : ClosureSearch(g).maximum();
  return {size, witness, Evidence::exhaustive_max, since(t0)};
}

std::optional<VertexSet> max_convex_at_least(const OrientedGraph& g, int k) {
  require_solvable(g);
  if (k < 1 || k > g.order() - 1)
    throw Error("k must be in 1.." + std::to_string(g.order() - 1) + ", got " + std::to_string(k));
  if (k == 1) return VertexSet::single(0);
  return ClosureSearch(g).at_least(k);
}

void for_each_convex_set(const OrientedGraph& g, const std::function<bool(VertexSet)>& visit) {
  ClosureSearch(g).visit_all(visit);
}

ConvexityCertificate certify(const OrientedGraph& g, int claimed, Evidence mode,
                             std::optional<VertexSet> hint) {
  if (claimed < 1) throw Error("claimed convexity number must be positive");
  require_solvable(g);
  const auto t0 = Clock::now();
  const VertexSet full = g.vertices();
  if (claimed > g.order() - 1)
    throw RefutedClaim("claim exceeds order - 1", std::nullopt);

  if (mode == Evidence::exhaustive_max) {
    auto cert = convexity_number(g);
    if (cert.claimed != claimed)
      throw RefutedClaim("exact convexity number is " + std::to_string(cert.claimed) +
                             ", not " + std::to_string(claimed),
                         cert.witness);
    cert.elapsed = since(t0);
    return cert;
  }

  if (hint) {
    const IntervalTable table(g);
    if (hint->size() != claimed || !hint->subset_of(full) || *hint == full)
      throw RefutedClaim("hint is not a proper set of the claimed size", *hint);
    if (!is_convex(table, *hint)) throw RefutedClaim("hint is not convex", *hint);
    return {claimed, *hint, Evidence::membership_only, since(t0)};
  }

  std::optional<VertexSet> hit;
  VertexSet largest;
  for_each_convex_set(g, [&](VertexSet s) {
    if (s == full) return true;
    if (s.size() > largest.size()) largest = s;
    if (s.size() == claimed) {
      hit = s;
      return false;
    }
    return true;
  });
  if (!hit)
    throw RefutedClaim("no proper convex set of size " + std::to_string(claimed), largest);
  return {claimed, *hit, Evidence::membership_only, since(t0)};
}

NearOrderReport near_order_checks(const OrientedGraph& g) {
  NearOrderReport r;
  r.order = g.order();
  r.con = convexity_number(g).claimed;
  for (Vertex v = 0; v < g.order(); ++v)
    if (classify_vertex(g, v) != VertexKind::ordinary) r.has_special_vertex = true;
  r.full_minus_one_equivalence = (r.con == r.order - 1) == r.has_special_vertex;
  r.no_two_applies = r.order >= 4;
  r.no_two_holds = !r.no_two_applies || r.con != 2;
  return r;
}

}  // namespace orconv
