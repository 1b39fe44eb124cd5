#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "orconv/convexity.hpp"

namespace orconv {

enum class Evidence { exhaustive_max, membership_only };
const char* to_string(Evidence e);
Evidence evidence_from_string(const std::string& s);

/// A proper convex set of size `claimed`, plus how strongly the claim
/// con(D) = claimed is backed.
struct ConvexityCertificate {
  int claimed = 0;
  VertexSet witness;
  Evidence evidence = Evidence::membership_only;
  std::chrono::milliseconds elapsed{0};
};

/// Thrown by certify() when a claim does not hold. `counterexample` is a
/// proper convex set that is larger than the claim, or the largest one found
/// when no set of the claimed size exists.
class RefutedClaim : public Error {
 public:
  RefutedClaim(const std::string& what, std::optional<VertexSet> counterexample)
      : Error(what), counterexample(counterexample) {}
  std::optional<VertexSet> counterexample;
};

enum class SolverRegime { automatic, subset_scan, closure_enumeration };

/// Largest order handled by the subset scan in automatic mode.
inline constexpr int kSubsetScanMaxOrder = 16;

/// Exact con(g) with a maximum proper convex set; among maximum sets the
/// numerically least mask is returned. Requires g connected with order >= 2.
ConvexityCertificate convexity_number(const OrientedGraph& g,
                                      SolverRegime regime = SolverRegime::automatic);

/// Some proper convex set with at least k vertices, or nullopt.
std::optional<VertexSet> max_convex_at_least(const OrientedGraph& g, int k);

/// Calls `visit` on every convex set (proper and improper, nonempty) exactly
/// once. Returning false from `visit` stops the enumeration.
void for_each_convex_set(const OrientedGraph& g, const std::function<bool(VertexSet)>& visit);

/// Checks a claimed convexity number. With a `hint`, membership-only mode
/// checks the hint directly instead of searching.
ConvexityCertificate certify(const OrientedGraph& g, int claimed, Evidence mode,
                             std::optional<VertexSet> hint = std::nullopt);

/// Cross-check of the classical near-order characterisations against the
/// exact solver.
struct NearOrderReport {
  int order = 0;
  int con = 0;
  bool has_special_vertex = false;  // source, sink or transitive vertex
  bool full_minus_one_equivalence = false;
  bool no_two_applies = false;
  bool no_two_holds = true;
  bool ok() const { return full_minus_one_equivalence && no_two_holds; }
};
NearOrderReport near_order_checks(const OrientedGraph& g);

}  // namespace orconv
