#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orconv/grid.hpp"

namespace orconv {

/// Backtracking over the orientations of `free` edges of `draft` (all other
/// edges already set). Accepts the first completion that is strong, keeps
/// `witness` convex and has exact convexity number `target`.
struct SeamSearchStats {
  long nodes = 0;
  long leaves = 0;
};
std::optional<GridDraft> seam_search(GridDraft draft, const std::vector<int>& free, VertexSet witness,
                                     int target, long max_nodes = 20'000'000,
                                     SeamSearchStats* stats = nullptr);

/// Swaps the roles of rows and columns: cell (i,j) of an n x m grid becomes
/// (j,i) of the m x n grid.
GridDraft transposed(const GridDraft& d);
VertexSet transposed(const GridSpec& spec, VertexSet s);
GridOrientation transposed(const GridOrientation& o);

// Two rows.
GridOrientation construct_2n(int n, int j);
// Three rows.
GridOrientation construct_3n_3j(int n, int j);
GridOrientation construct_3n_3j2(int n, int j);
GridOrientation construct_3n_3j1(int n, int j);
GridOrientation construct_3n_con4(int n);
// General grids.
GridOrientation gadget_H();
GridOrientation construct_nm_con4(int n, int m);
GridOrientation construct_nm_ab(int n, int m, int a, int b);
GridOrientation construct_nm_nb(int n, int m, int b);
GridOrientation construct_nm_ab_kl(int n, int m, int a, int b, int k, int l);
GridOrientation construct_nm_high(int n, int m, int k);

/// Checks the orientation is strong and that con equals its target; exact
/// when the order is at most `exhaustive_limit`, otherwise by checking the
/// provenance witness. Fills provenance.evidence; throws RefutedClaim.
void certify_orientation(GridOrientation& o, int exhaustive_limit = 36);

/// Constructor lookup by name ("whirlpool", "2n", "3n-3j", "3n-3j+2",
/// "3n-3j+1", "3n-con4", "gadget-H", "nm-con4", "nm-ab", "nm-nb",
/// "nm-ab-kl", "nm-high") with named integer parameters.
GridOrientation construct(const std::string& name, const std::map<std::string, int>& params);
std::vector<std::string> constructor_names();

/// Constructor calls, in order of preference, for every value the theorems
/// place in the strong spectrum of P_n x P_m that some constructor reaches.
struct ConstructorCall {
  std::string name;
  std::map<std::string, int> params;
};
std::map<int, std::vector<ConstructorCall>> constructive_plan(int n, int m);

/// First candidate of the plan for `value` that builds without error.
/// Throws when the plan has no candidate or all of them fail.
GridOrientation construct_value(int n, int m, int value);

}  // namespace orconv
