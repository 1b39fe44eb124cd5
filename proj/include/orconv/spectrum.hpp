#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "orconv/digraph.hpp"
#include "orconv/grid.hpp"

namespace orconv {

class WitnessCache;

inline constexpr int kDefaultEdgeCap = 20;
inline constexpr int kHardEdgeCap = 24;

struct EnumerationOptions {
  int max_edges = kDefaultEdgeCap;  // raised up to kHardEdgeCap by flag
  bool reversal_symmetry = false;   // fix one edge and double via reverse()
  int workers = 1;
  bool strong_only = true;          // false: every orientation (S_C)
};

/// Orientation of g from a bit mask: bit e set means edge e = (u,v), u < v,
/// is oriented u -> v.
OrientedGraph orientation_from_mask(const Graph& g, std::uint64_t mask);

/// Visits every strong orientation of g exactly once, in Gray-code order
/// (successive orientations differ in one arc). Returns the number visited.
/// A graph with a bridge yields nothing. Throws when |E| exceeds the cap.
/// `visit` gets the mask too; returning false stops the enumeration.
std::uint64_t enumerate_strong_orientations(
    const Graph& g, const std::function<bool(const OrientedGraph&, std::uint64_t)>& visit,
    const EnumerationOptions& opt = {});

enum class SpectrumMode { exhaustive, constructive };

struct SpectrumReport {
  std::string graph_id;
  SpectrumMode mode = SpectrumMode::exhaustive;
  std::set<int> achieved;
  std::map<int, OrientedGraph> witnesses;  // value -> orientation with least mask
  std::uint64_t total = 0;                 // orientations considered
  std::uint64_t strong = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exhaustive spectrum of an arbitrary graph: con over all strong
/// orientations (or all orientations when opt.strong_only is false).
SpectrumReport spectrum(const Graph& g, const EnumerationOptions& opt = {}, std::string graph_id = "");
/// Spectrum of the grid P_n x P_m; constructive mode assembles certified
/// constructor witnesses instead of enumerating, through `cache` when given.
SpectrumReport spectrum(int n, int m, SpectrumMode mode, const EnumerationOptions& opt = {},
                        WitnessCache* cache = nullptr);

/// Closed-form strong spectrum from the theorems (rows/columns swapped so that
/// m <= n first). Throws outside every theorem's hypotheses.
std::set<int> theoretical_spectrum(int n, int m);
/// Values no strong orientation of P_n x P_m can reach.
std::set<int> excluded_values(int n, int m);

struct CrossValidation {
  int n = 0, m = 0;
  bool exhaustive_run = false;
  bool exhaustive_matches = true;     // exhaustive spectrum == theoretical
  bool constructive_subset = true;    // constructive witnesses within theory
  bool constructive_complete = true;  // every theoretical value witnessed
  bool exclusions_respected = true;   // no achieved value excluded
  std::set<int> theoretical, exhaustive, constructive;
  std::optional<OrientedGraph> counterexample;
  std::string detail;
  bool ok() const { return exhaustive_matches && constructive_subset && exclusions_respected; }
};
CrossValidation cross_validate(int n, int m, const EnumerationOptions& opt = {}, bool constructive = true);

}  // namespace orconv
