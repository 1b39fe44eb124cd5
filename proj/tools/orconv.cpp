// orconv: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 refuted certification, 2 usage or input error.

#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "orconv/acceptance.hpp"
#include "orconv/constructions.hpp"
#include "orconv/formats.hpp"
#include "orconv/reduction.hpp"
#include "orconv/solver.hpp"
#include "orconv/spectrum.hpp"

using namespace orconv;
using nlohmann::json;

namespace {

struct Config {
  std::string format = "json";
  int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  int max_edges = kDefaultEdgeCap;
  std::string regime = "auto";
  std::string cache_dir;
  bool no_cache = false;
};

std::optional<WitnessCache> open_cache(const Config& c) {
  if (c.no_cache) return std::nullopt;
  return WitnessCache(c.cache_dir.empty() ? WitnessCache::default_dir() : std::filesystem::path(c.cache_dir));
}

SolverRegime regime_of(const std::string& s) {
  if (s == "subset") return SolverRegime::subset_scan;
  if (s == "closure") return SolverRegime::closure_enumeration;
  return SolverRegime::automatic;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// A digraph file in any supported format; grid inputs keep their grid.
struct Loaded {
  OrientedGraph digraph;
  std::optional<GridOrientation> grid;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (!looks_like_json(text)) {
      auto o = parse_ascii(text);
      return {o.digraph, o};
    }
    const auto j = json::parse(text);
    if (j.contains("n") && j.contains("m")) {
      auto o = grid_from_json(text);
      return {o.digraph, o};
    }
    return {digraph_from_json(text), std::nullopt};
  } catch (const json::exception& e) {
    throw FormatError(path, e.what());
  } catch (const FormatError& e) {
    throw FormatError(path, e.what());
  }
}

void emit_digraph(const Config& c, const OrientedGraph& g, const std::optional<GridOrientation>& grid) {
  if (c.format == "dot") std::cout << (grid ? to_dot(*grid) : to_dot(g));
  else if (c.format == "ascii") {
    if (!grid) throw Error("ascii output needs a grid orientation");
    std::cout << render_ascii(*grid);
  } else std::cout << (grid ? grid_to_json(*grid) : digraph_to_json(g)) << "\n";
}

std::string show(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

VertexSet parse_seed(const std::string& s, int order) {
  VertexSet out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw Error("bad seed vertex '" + tok + "'");
    }
    if (v < 0 || v >= order) throw Error("seed vertex " + tok + " out of range");
    out.insert(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented convexity toolkit"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "ascii"}));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-edges", cfg.max_edges, "Enumeration edge cap")->check(CLI::Range(1, kHardEdgeCap));
  app.add_option("--regime", cfg.regime, "Solver regime")->check(CLI::IsMember({"auto", "subset", "closure"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Witness cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the witness cache");

  // grid
  int gn = 0, gm = 0;
  auto* grid_cmd = app.add_subcommand("grid", "Underlying grid graph P_n x P_m");
  grid_cmd->add_option("n", gn)->required()->check(CLI::Range(2, kMaxOrder));
  grid_cmd->add_option("m", gm)->required()->check(CLI::Range(2, kMaxOrder));

  // orient
  std::string lemma;
  std::map<std::string, int> params;
  int target_value = -1;
  bool certify_flag = false;
  auto* orient_cmd = app.add_subcommand("orient", "Build a grid orientation by construction name");
  orient_cmd->add_option("lemma", lemma, "Construction name, or 'value' with --value")->required();
  for (const char* key : {"n", "m", "j", "a", "b", "k", "l", "anti", "transpose"})
    orient_cmd->add_option_function<int>(std::string("--") + key, [&params, key](int v) { params[key] = v; });
  orient_cmd->add_option("--value", target_value, "Target con (with lemma 'value')");
  orient_cmd->add_flag("--certify", certify_flag, "Certify before printing");

  // con
  std::string file;
  int claim = -1;
  std::string evidence = "exhaustive";
  auto* con_cmd = app.add_subcommand("con", "Convexity number of a digraph file ('-' for stdin)");
  con_cmd->add_option("file", file)->required();
  con_cmd->add_option("--claim", claim, "Check a claimed value instead of computing");
  con_cmd->add_option("--evidence", evidence)->check(CLI::IsMember({"exhaustive", "membership"}));

  // hull
  std::string seed;
  auto* hull_cmd = app.add_subcommand("hull", "Convex hull of a vertex set");
  hull_cmd->add_option("file", file)->required();
  hull_cmd->add_option("--seed", seed, "Comma-separated vertices")->required();

  // spectrum
  int sn = 0, sm = 0;
  std::string mode = "exhaustive";
  bool symmetry = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "Strong convexity spectrum of P_n x P_m");
  spec_cmd->add_option("n", sn)->required()->check(CLI::Range(2, kMaxOrder));
  spec_cmd->add_option("m", sm)->required()->check(CLI::Range(2, kMaxOrder));
  spec_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "constructive"}));
  spec_cmd->add_flag("--symmetry", symmetry, "Enumerate half the space and use reversal");

  // reduce
  int k = 3, gadget_half = 3;
  bool check = false;
  auto* red_cmd = app.add_subcommand("reduce", "Clique instance to oriented convexity instance");
  red_cmd->add_option("graph", file, "Edge-list JSON or DIMACS file")->required();
  red_cmd->add_option("--k", k)->check(CLI::Range(3, kMaxOrder));
  red_cmd->add_option("--gadget-half", gadget_half)->check(CLI::Range(3, 64));
  red_cmd->add_flag("--check", check, "Also verify the con / clique correspondence (stderr)");

  // verify-paper
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  verify_cmd->add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, 8));

  // render
  auto* render_cmd = app.add_subcommand("render", "Re-emit a digraph or grid file in another format");
  render_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*grid_cmd) {
      const GridSpec spec(gn, gm);
      if (cfg.format == "dot") {
        std::cout << "graph \"grid_" << gn << "x" << gm << "\" {\n";
        for (auto [u, v] : spec.edges()) std::cout << "  " << u << " -- " << v << ";\n";
        std::cout << "}\n";
      } else {
        json edges = json::array();
        for (auto [u, v] : spec.edges()) edges.push_back({u, v});
        std::cout << json{{"n", spec.order()}, {"edges", edges}, {"grid", {gn, gm}}}.dump() << "\n";
      }
    } else if (*orient_cmd) {
      auto cache = open_cache(cfg);
      GridOrientation o = [&] {
        if (lemma == "value") {
          if (target_value < 0 || !params.count("n") || !params.count("m"))
            throw Error("'orient value' needs --n, --m and --value");
          return cache ? cache->construct_value(params["n"], params["m"], target_value)
                       : construct_value(params["n"], params["m"], target_value);
        }
        return cache ? cache->construct(lemma, params) : construct(lemma, params);
      }();
      if (certify_flag) certify_orientation(o);
      emit_digraph(cfg, o.digraph, o);
    } else if (*con_cmd) {
      const auto in = load(file);
      ConvexityCertificate cert;
      if (claim >= 0) {
        std::optional<VertexSet> hint;
        if (in.grid && in.grid->provenance.witness) hint = in.grid->provenance.witness;
        cert = certify(in.digraph, claim, evidence == "exhaustive" ? Evidence::exhaustive_max : Evidence::membership_only,
                       hint);
      } else {
        cert = convexity_number(in.digraph, regime_of(cfg.regime));
      }
      if (cfg.format == "ascii") std::cout << cert.claimed << "\n";
      else std::cout << certificate_to_json(cert) << "\n";
    } else if (*hull_cmd) {
      const auto in = load(file);
      const VertexSet s = parse_seed(seed, in.digraph.order());
      const VertexSet h = hull(IntervalTable(in.digraph), s);
      json a = json::array(), b = json::array();
      s.for_each([&](Vertex v) { a.push_back(v); });
      h.for_each([&](Vertex v) { b.push_back(v); });
      std::cout << json{{"seed", a}, {"hull", b}, {"size", h.size()}}.dump() << "\n";
    } else if (*spec_cmd) {
      EnumerationOptions opt;
      opt.workers = cfg.workers;
      opt.max_edges = cfg.max_edges;
      opt.reversal_symmetry = symmetry;
      auto cache = open_cache(cfg);
      std::cerr << "spectrum " << sn << "x" << sm << " (" << mode << ", " << cfg.workers << " workers)\n";
      const auto rep = spectrum(sn, sm, mode == "exhaustive" ? SpectrumMode::exhaustive : SpectrumMode::constructive,
                                opt, cache ? &*cache : nullptr);
      std::cerr << "done in " << rep.elapsed.count() << " ms, " << rep.strong << " strong orientations\n";
      if (cfg.format == "ascii") std::cout << show(rep.achieved) << "\n";
      else std::cout << spectrum_to_json(rep) << "\n";
    } else if (*red_cmd) {
      const Graph g = parse_graph(read_file(file));
      const CliqueInstance inst{g, k};
      const auto r = reduce(inst, gadget_half);
      if (check) {
        const auto rep = correspondence_check(inst, r);
        std::cerr << "omega=" << rep.omega << " con=" << rep.con << " expected=" << rep.expected_con
                  << (rep.ok() ? " ok\n" : " MISMATCH\n");
        if (!rep.ok()) {
          std::cout << reduction_to_json(r) << "\n";
          return 1;
        }
      }
      if (cfg.format == "dot") std::cout << to_dot(r.digraph, "reduction");
      else std::cout << reduction_to_json(r) << "\n";
    } else if (*verify_cmd) {
      auto cache = open_cache(cfg);
      AcceptanceOptions opt;
      opt.workers = cfg.workers;
      opt.cache = cache ? &*cache : nullptr;
      if (only.empty())
        for (int id = 1; id <= 8; ++id) only.push_back(id);
      json out = json::array();
      bool all = true;
      for (int id : only) {
        const auto r = run_criterion(id, opt);
        all = all && r.passed;
        std::cerr << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "\n";
        if (cfg.format == "ascii") std::cout << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.detail << "\n";
        out.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      }
      if (cfg.format != "ascii") std::cout << out.dump() << "\n";
      return all ? 0 : 1;
    } else if (*render_cmd) {
      const auto in = load(file);
      emit_digraph(cfg, in.digraph, in.grid);
    }
  } catch (const RefutedClaim& e) {
    std::cerr << "refuted: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
