#include "orconv/formats.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "orconv/constructions.hpp"

namespace orconv {

using nlohmann::json;

namespace {

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError("", "malformed " + what + " JSON: " + e.what());
  }
}

// Wraps nlohmann's type/key errors so callers only see FormatError.
template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw FormatError("", "bad " + what + " JSON: " + e.what());
  } catch (const Error& e) {
    throw FormatError("", "bad " + what + " JSON: " + e.what());
  }
}

json digraph_json(const OrientedGraph& g) {
  json arcs = json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  json labels = json::object();
  for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
  return {{"order", g.order()}, {"arcs", arcs}, {"labels", labels}};
}

OrientedGraph digraph_of(const json& j) {
  const int n = j.at("order").get<int>();
  if (n < 0 || n > kMaxOrder) throw FormatError("", "order out of range");
  OrientedGraph g(n);
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) throw FormatError("", "arc must be a pair");
    g.add_arc(a[0].get<int>(), a[1].get<int>());
  }
  if (j.contains("labels"))
    for (const auto& [k, v] : j.at("labels").items()) {
      const int idx = std::stoi(k);
      if (idx < 0 || idx >= n) throw FormatError("", "label for missing vertex " + k);
      g.set_label(idx, v.get<std::string>());
    }
  return g;
}

json vertex_list(VertexSet s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet vertex_set_of(const json& j, int order) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= order) throw FormatError("", "vertex " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

json certificate_json(const ConvexityCertificate& c) {
  return {{"claimed", c.claimed},
          {"witness", vertex_list(c.witness)},
          {"evidence", to_string(c.evidence)},
          {"elapsed_ms", c.elapsed.count()}};
}

json grid_json(const GridOrientation& o) {
  const auto& s = o.spec;
  json arcs = json::array();
  for (auto [u, v] : o.digraph.arcs()) {
    const Cell a = s.cell(u), b = s.cell(v);
    arcs.push_back({a.i, a.j, b.i, b.j});
  }
  json prov = {{"lemma", o.provenance.lemma}, {"params", o.provenance.params}, {"method", o.provenance.method}};
  if (o.provenance.witness) {
    json cells = json::array();
    o.provenance.witness->for_each([&](Vertex v) { cells.push_back({s.cell(v).i, s.cell(v).j}); });
    prov["witness"] = cells;
  }
  if (o.provenance.evidence) prov["evidence"] = to_string(*o.provenance.evidence);
  return {{"n", s.n()}, {"m", s.m()}, {"arcs", arcs}, {"provenance", prov}, {"target", o.target}};
}

GridOrientation grid_of(const json& j) {
  const GridSpec spec(j.at("n").get<int>(), j.at("m").get<int>());
  GridDraft d(spec);
  auto cell = [&](int i, int jj) {
    if (!spec.contains({i, jj})) throw FormatError("", "cell outside the grid");
    return Cell{i, jj};
  };
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 4) throw FormatError("", "grid arc must be [i,j,i',j']");
    d.arc(cell(a[0].get<int>(), a[1].get<int>()), cell(a[2].get<int>(), a[3].get<int>()));
  }
  if (static_cast<int>(j.at("arcs").size()) != spec.edge_count())
    throw FormatError("", "arc list does not orient every grid edge once");
  GridOrientation o{spec, d.build(), {}, j.value("target", 0)};
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    o.provenance.lemma = p.value("lemma", "");
    o.provenance.method = p.value("method", "construction");
    if (p.contains("params")) o.provenance.params = p.at("params").get<std::map<std::string, int>>();
    if (p.contains("witness")) {
      VertexSet w;
      for (const auto& c : p.at("witness")) w.insert(spec.vertex(cell(c.at(0).get<int>(), c.at(1).get<int>())));
      o.provenance.witness = w;
    }
    if (p.contains("evidence")) o.provenance.evidence = evidence_from_string(p.at("evidence").get<std::string>());
  }
  return o;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string digraph_to_json(const OrientedGraph& g) { return digraph_json(g).dump(); }

OrientedGraph digraph_from_json(const std::string& text) {
  const json j = parse(text, "digraph");
  return guarded("digraph", [&] { return digraph_of(j); });
}

std::string to_dot(const OrientedGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape_dot(name) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << escape_dot(g.name(v)) << "\"];\n";
  for (auto [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const GridOrientation& o) {
  std::ostringstream out;
  out << "digraph \"grid_" << o.spec.n() << "x" << o.spec.m() << "\" {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < o.spec.order(); ++v) {
    const Cell c = o.spec.cell(v);
    const bool in_w = o.provenance.witness && o.provenance.witness->contains(v);
    out << "  " << v << " [label=\"" << o.spec.label(v) << "\", pos=\"" << c.i << "," << c.j << "!\""
        << (in_w ? ", style=filled" : "") << "];\n";
  }
  for (auto [u, v] : o.digraph.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string certificate_to_json(const ConvexityCertificate& c) { return certificate_json(c).dump(); }

ConvexityCertificate certificate_from_json(const std::string& text) {
  const json j = parse(text, "certificate");
  return guarded("certificate", [&] {
    ConvexityCertificate c;
    c.claimed = j.at("claimed").get<int>();
    c.witness = vertex_set_of(j.at("witness"), kMaxOrder);
    c.evidence = evidence_from_string(j.at("evidence").get<std::string>());
    c.elapsed = std::chrono::milliseconds(j.value("elapsed_ms", 0));
    return c;
  });
}

std::string grid_to_json(const GridOrientation& o) { return grid_json(o).dump(); }

GridOrientation grid_from_json(const std::string& text) {
  const json j = parse(text, "grid orientation");
  return guarded("grid orientation", [&] { return grid_of(j); });
}

std::string spectrum_to_json(const SpectrumReport& r) {
  json w = json::object();
  for (const auto& [v, g] : r.witnesses) w[std::to_string(v)] = digraph_json(g);
  json j = {{"graph_id", r.graph_id},
            {"mode", r.mode == SpectrumMode::exhaustive ? "exhaustive" : "constructive"},
            {"achieved", r.achieved},
            {"total", r.total},
            {"strong", r.strong},
            {"elapsed_ms", r.elapsed.count()},
            {"witnesses", w}};
  return j.dump();
}

SpectrumReport spectrum_from_json(const std::string& text) {
  const json j = parse(text, "spectrum report");
  return guarded("spectrum report", [&] {
    SpectrumReport r;
    r.graph_id = j.at("graph_id").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "exhaustive" && mode != "constructive") throw FormatError("", "unknown mode " + mode);
    r.mode = mode == "exhaustive" ? SpectrumMode::exhaustive : SpectrumMode::constructive;
    r.achieved = j.at("achieved").get<std::set<int>>();
    r.total = j.at("total").get<std::uint64_t>();
    r.strong = j.at("strong").get<std::uint64_t>();
    r.elapsed = std::chrono::milliseconds(j.value("elapsed_ms", 0));
    for (const auto& [k, v] : j.at("witnesses").items()) r.witnesses.emplace(std::stoi(k), digraph_of(v));
    return r;
  });
}

std::string reduction_to_json(const ReductionInstance& r) {
  json j = digraph_json(r.digraph);
  json gadgets = json::array();
  for (const auto& g : r.gadgets) gadgets.push_back({{"cycle", g.cycle}, {"x", g.x}, {"y", g.y}});
  j["metadata"] = {{"k_prime", r.k_prime}, {"gadget_half", r.gadget_half}, {"gadgets", gadgets}, {"z", r.z}};
  return j.dump();
}

ReductionInstance reduction_from_json(const std::string& text) {
  const json j = parse(text, "reduction");
  return guarded("reduction", [&] {
    ReductionInstance r;
    r.digraph = digraph_of(j);
    const auto& md = j.at("metadata");
    r.k_prime = md.at("k_prime").get<int>();
    r.gadget_half = md.at("gadget_half").get<int>();
    for (const auto& g : md.at("gadgets"))
      r.gadgets.push_back({g.at("cycle").get<std::vector<Vertex>>(), g.at("x").get<Vertex>(), g.at("y").get<Vertex>()});
    r.z = md.at("z").get<std::vector<Vertex>>();
    return r;
  });
}

OrientedGraph any_digraph_from_json(const std::string& text) {
  const json j = parse(text, "digraph");
  return guarded("digraph", [&] {
    if (j.contains("order")) return digraph_of(j);
    if (j.contains("n") && j.contains("arcs")) return grid_of(j).digraph;
    throw FormatError("", "not a digraph or grid orientation");
  });
}

std::string read_file(const std::filesystem::path& p) {
  if (p == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError(p.string(), "cannot open");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << text;
    if (!out) throw Error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, p);
}

WitnessCache::WitnessCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path WitnessCache::default_dir() {
  if (const char* env = std::getenv("ORCONV_CACHE_DIR"); env && *env) return env;
  return ".orconv-cache";
}

std::filesystem::path WitnessCache::path_for(const std::string& name,
                                             const std::map<std::string, int>& params) const {
  std::string key = name;
  for (const auto& [k, v] : params) key += "_" + k + std::to_string(v);
  for (char& c : key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '~';
  return dir_ / (key + ".json");
}

std::optional<GridOrientation> WitnessCache::get(const std::string& name,
                                                 const std::map<std::string, int>& params) const {
  const auto p = path_for(name, params);
  if (!std::filesystem::exists(p)) return std::nullopt;
  try {
    return grid_from_json(read_file(p));
  } catch (const FormatError& e) {
    throw FormatError(p.string(), e.what());
  }
}

void WitnessCache::put(const std::string& name, const std::map<std::string, int>& params, GridOrientation o,
                       int exhaustive_limit) {
  certify_orientation(o, exhaustive_limit);
  write_file(path_for(name, params), grid_to_json(o));
}

GridOrientation WitnessCache::construct(const std::string& name, const std::map<std::string, int>& params) {
  if (auto hit = get(name, params)) return *hit;
  auto o = orconv::construct(name, params);
  put(name, params, o);
  return *get(name, params);
}

GridOrientation WitnessCache::construct_value(int n, int m, int value) {
  const auto plan = constructive_plan(n, m);
  auto it = plan.find(value);
  if (it == plan.end()) throw Error("no construction reaches " + std::to_string(value));
  std::string failures;
  for (const auto& call : it->second) {
    try {
      return construct(call.name, call.params);
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      failures += std::string("; ") + e.what();
    }
  }
  throw Error("every construction for " + std::to_string(value) + " failed" + failures);
}

}  // namespace orconv
