#include "orconv/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>
#include <vector>

#include "orconv/constructions.hpp"
#include "orconv/formats.hpp"
#include "orconv/solver.hpp"

namespace orconv {

OrientedGraph orientation_from_mask(const Graph& g, std::uint64_t mask) {
  OrientedGraph d(g.order());
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edges()[e];
    if ((mask >> e) & 1U) d.add_arc(u, v);
    else d.add_arc(v, u);
  }
  return d;
}

namespace {

void check_cap(const Graph& g, const EnumerationOptions& opt) {
  const int cap = std::min(opt.max_edges, kHardEdgeCap);
  if (g.size() > cap)
    throw Error("enumeration over 2^" + std::to_string(g.size()) + " = " +
                std::to_string(std::uint64_t{1} << std::min(g.size(), 63)) + " orientations exceeds the cap of 2^" +
                std::to_string(cap));
}

// Gray-code walk over the low `bits` edges with the higher edges fixed by
// `prefix`; calls visit on every orientation (strong filtering is the
// caller's job).
template <class F>
bool gray_walk(const Graph& g, int bits, std::uint64_t prefix, F&& visit) {
  std::uint64_t mask = prefix;
  OrientedGraph d = orientation_from_mask(g, mask);
  if (!visit(d, mask)) return false;
  const std::uint64_t count = std::uint64_t{1} << bits;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int e = std::countr_zero(i);
    auto [u, v] = g.edges()[e];
    if ((mask >> e) & 1U) d.flip_arc(u, v);
    else d.flip_arc(v, u);
    mask ^= std::uint64_t{1} << e;
    if (!visit(d, mask)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t enumerate_strong_orientations(const Graph& g,
                                            const std::function<bool(const OrientedGraph&, std::uint64_t)>& visit,
                                            const EnumerationOptions& opt) {
  check_cap(g, opt);
  if (g.order() < 2 || !g.two_edge_connected()) return 0;
  std::uint64_t seen = 0;
  const int E = g.size();
  const int bits = opt.reversal_symmetry ? E - 1 : E;
  gray_walk(g, bits, 0, [&](const OrientedGraph& d, std::uint64_t mask) {
    if (!is_strong(d)) return true;
    ++seen;
    if (!visit(d, mask)) return false;
    if (opt.reversal_symmetry) {
      ++seen;
      const std::uint64_t rmask = ~mask & ((E == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << E) - 1);
      if (!visit(reverse(d), rmask)) return false;
    }
    return true;
  });
  return seen;
}

SpectrumReport spectrum(const Graph& g, const EnumerationOptions& opt, std::string graph_id) {
  check_cap(g, opt);
  const auto t0 = std::chrono::steady_clock::now();
  SpectrumReport rep;
  rep.graph_id = std::move(graph_id);
  rep.mode = SpectrumMode::exhaustive;
  const int E = g.size();
  rep.total = std::uint64_t{1} << E;
  if (g.order() < 2 || (opt.strong_only && !g.two_edge_connected())) {
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return rep;
  }
  // With reversal symmetry the top edge is fixed to 0; every value reached by
  // a mask M is also reached by ~M, so the least witness mask has top bit 0
  // either way.
  const int bits = opt.reversal_symmetry ? E - 1 : E;
  const int workers = std::max(1, opt.workers);
  int shard_bits = 0;
  while (shard_bits < bits && (1 << shard_bits) < 4 * workers && bits - shard_bits > 4) ++shard_bits;
  const int low = bits - shard_bits;
  const std::uint64_t shards = std::uint64_t{1} << shard_bits;

  struct Local {
    std::map<int, std::uint64_t> best;  // value -> least mask
    std::uint64_t strong = 0;
  };
  std::vector<Local> locals(shards);
  auto run_shard = [&](std::uint64_t s) {
    Local& L = locals[s];
    gray_walk(g, low, s << low, [&](const OrientedGraph& d, std::uint64_t mask) {
      if (opt.strong_only ? !is_strong(d) : !d.underlying().connected()) return true;
      ++L.strong;
      const int c = convexity_number(d).claimed;
      auto it = L.best.find(c);
      if (it == L.best.end() || mask < it->second) L.best[c] = mask;
      return true;
    });
  };
  std::mutex mu;
  std::uint64_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::uint64_t s;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next == shards) return;
        s = next++;
      }
      run_shard(s);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<int, std::uint64_t> best;
  for (const auto& L : locals) {
    rep.strong += L.strong;
    for (auto [c, mask] : L.best) {
      auto it = best.find(c);
      if (it == best.end() || mask < it->second) best[c] = mask;
    }
  }
  if (opt.reversal_symmetry) rep.strong *= 2;
  for (auto [c, mask] : best) {
    rep.achieved.insert(c);
    rep.witnesses.emplace(c, orientation_from_mask(g, mask));
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

SpectrumReport spectrum(int n, int m, SpectrumMode mode, const EnumerationOptions& opt, WitnessCache* cache) {
  const GridSpec spec(n, m);
  const std::string id = "grid(" + std::to_string(n) + "," + std::to_string(m) + ")";
  if (mode == SpectrumMode::exhaustive) return spectrum(spec.graph(), opt, id);
  const auto t0 = std::chrono::steady_clock::now();
  SpectrumReport rep;
  rep.graph_id = id;
  rep.mode = SpectrumMode::constructive;
  for (const auto& [value, calls] : constructive_plan(n, m)) {
    (void)calls;
    auto o = cache ? cache->construct_value(n, m, value) : construct_value(n, m, value);
    certify_orientation(o, 0);  // membership: witness convex with the target size
    rep.achieved.insert(value);
    rep.witnesses.emplace(value, o.digraph);
    ++rep.total;
    ++rep.strong;
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return rep;
}

std::set<int> theoretical_spectrum(int n, int m) {
  if (std::min(n, m) < 2) throw Error("grid sides must be at least 2");
  const int lo = std::min(n, m), hi = std::max(n, m);
  std::set<int> s{1};
  if (lo == 2) {
    for (int j = hi / 2; j <= hi - 1; ++j)
      if (j != 1) s.insert(2 * j);
    return s;
  }
  int top = 0;
  std::set<int> gaps{2, 3, 5};
  if (lo == 3) {
    top = 3 * hi - 3;
    gaps.insert(7);
  } else {
    top = hi * lo - std::min(lo, 6);
  }
  for (int v = 1; v <= top; ++v)
    if (!gaps.count(v)) s.insert(v);
  return s;
}

std::set<int> excluded_values(int n, int m) {
  if (std::min(n, m) < 2) throw Error("grid sides must be at least 2");
  std::set<int> s{2, 3, 5, n * m - 1};
  for (int i = 3; i <= 6; ++i)
    if (n >= i && m >= i) s.insert(n * m - (i - 1));
  return s;
}

CrossValidation cross_validate(int n, int m, const EnumerationOptions& opt, bool constructive) {
  CrossValidation cv;
  cv.n = n;
  cv.m = m;
  cv.theoretical = theoretical_spectrum(n, m);
  const std::set<int> excluded = excluded_values(n, m);
  const GridSpec spec(n, m);
  if (spec.edge_count() <= std::min(opt.max_edges, kHardEdgeCap)) {
    cv.exhaustive_run = true;
    auto rep = spectrum(n, m, SpectrumMode::exhaustive, opt);
    cv.exhaustive = rep.achieved;
    cv.exhaustive_matches = rep.achieved == cv.theoretical;
    for (int v : rep.achieved)
      if (excluded.count(v)) {
        cv.exclusions_respected = false;
        cv.counterexample = rep.witnesses.at(v);
        cv.detail += "excluded value " + std::to_string(v) + " reached; ";
      }
    if (!cv.exhaustive_matches) {
      for (int v : rep.achieved)
        if (!cv.theoretical.count(v)) {
          cv.counterexample = rep.witnesses.at(v);
          cv.detail += "value " + std::to_string(v) + " reached outside theory; ";
        }
      for (int v : cv.theoretical)
        if (!rep.achieved.count(v)) cv.detail += "value " + std::to_string(v) + " never reached; ";
    }
  }
  if (constructive) {
    auto rep = spectrum(n, m, SpectrumMode::constructive, opt);
    cv.constructive = rep.achieved;
    for (int v : rep.achieved) {
      if (!cv.theoretical.count(v)) {
        cv.constructive_subset = false;
        cv.counterexample = rep.witnesses.at(v);
        cv.detail += "constructed value " + std::to_string(v) + " outside theory; ";
      }
      if (excluded.count(v)) cv.exclusions_respected = false;
    }
    cv.constructive_complete = std::includes(rep.achieved.begin(), rep.achieved.end(), cv.theoretical.begin(),
                                             cv.theoretical.end());
  }
  return cv;
}

}  // namespace orconv
