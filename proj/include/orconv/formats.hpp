#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "orconv/digraph.hpp"
#include "orconv/grid.hpp"
#include "orconv/reduction.hpp"
#include "orconv/solver.hpp"
#include "orconv/spectrum.hpp"

namespace orconv {

/// Raised when a file or string cannot be parsed; `source` names the input.
class FormatError : public Error {
 public:
  FormatError(std::string source, const std::string& what)
      : Error(source.empty() ? what : source + ": " + what), source(std::move(source)) {}
  std::string source;
};

// Digraph: {"order": n, "arcs": [[u,v],...], "labels": {"v": name}}.
std::string digraph_to_json(const OrientedGraph& g);
OrientedGraph digraph_from_json(const std::string& text);
/// DOT digraph; labels become node labels.
std::string to_dot(const OrientedGraph& g, const std::string& name = "D");
/// DOT with grid coordinates as pinned positions.
std::string to_dot(const GridOrientation& o);

// Certificate: {claimed, witness: [v...], evidence, elapsed_ms}.
std::string certificate_to_json(const ConvexityCertificate& c);
ConvexityCertificate certificate_from_json(const std::string& text);

// Grid orientation: {n, m, arcs: [[i,j,i',j'],...], provenance, target}.
std::string grid_to_json(const GridOrientation& o);
GridOrientation grid_from_json(const std::string& text);

std::string spectrum_to_json(const SpectrumReport& r);
SpectrumReport spectrum_from_json(const std::string& text);

/// The digraph JSON with a "metadata" object holding k_prime, gadget_half,
/// the gadget map and the z path.
std::string reduction_to_json(const ReductionInstance& r);
ReductionInstance reduction_from_json(const std::string& text);

/// Any of the formats above, picked by the keys present; grids come back as
/// their digraph.
OrientedGraph any_digraph_from_json(const std::string& text);

std::string read_file(const std::filesystem::path& p);  // "-" reads stdin
void write_file(const std::filesystem::path& p, const std::string& text);

/// Directory of grid-orientation JSON files keyed by (construction, params).
class WitnessCache {
 public:
  explicit WitnessCache(std::filesystem::path dir);
  /// ORCONV_CACHE_DIR when set, else ".orconv-cache" in the working directory.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& name, const std::map<std::string, int>& params) const;

  /// Absent when no file exists; throws FormatError on a corrupted file.
  std::optional<GridOrientation> get(const std::string& name, const std::map<std::string, int>& params) const;
  /// Certifies (exact up to `exhaustive_limit` vertices) and then stores.
  void put(const std::string& name, const std::map<std::string, int>& params, GridOrientation o,
           int exhaustive_limit = 36);

  /// Cached constructor call; builds and stores on a miss.
  GridOrientation construct(const std::string& name, const std::map<std::string, int>& params);
  /// construct_value() through the cache.
  GridOrientation construct_value(int n, int m, int value);

 private:
  std::filesystem::path dir_;
};

}  // namespace orconv
