#include "sepdesign/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/random.hpp"

namespace sepdesign {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Vertex resolve_vertex(const json& value, const std::map<std::string, Vertex>& by_name,
                      std::size_t n) {
  if (value.is_number_integer()) {
    const auto id = value.get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(id));
    }
    return static_cast<Vertex>(id);
  }
  if (value.is_string()) {
    const auto key = value.get<std::string>();
    if (auto it = by_name.find(key); it != by_name.end()) return it->second;
    // Row maps key vertices by decimal id when the graph has no names.
    std::size_t used = 0;
    try {
      const auto id = std::stoull(key, &used);
      if (used == key.size() && id < n) return static_cast<Vertex>(id);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidInput, "unknown vertex '" + key + "'");
  }
  throw Error(ErrorKind::InvalidInput, "vertex must be an integer id or a name");
}

std::map<std::string, Vertex> name_index(const std::vector<std::string>& names) {
  std::map<std::string, Vertex> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.emplace(names[i], static_cast<Vertex>(i)).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate vertex name '" + names[i] + "'");
    }
  }
  return out;
}

}  // namespace

GraphDocument parse_graph_json(std::string_view text) {
  const json doc = parse(text);
  try {
    GraphDocument out;
    const auto n = doc.at("n").get<std::size_t>();
    if (doc.contains("names")) {
      out.names = doc.at("names").get<std::vector<std::string>>();
      if (out.names.size() != n) {
        throw Error(ErrorKind::InvalidInput, "names must list exactly n entries");
      }
    }
    const auto by_name = name_index(out.names);

    std::vector<Edge> edges;
    for (const auto& e : doc.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorKind::InvalidInput, "edges must be pairs");
      }
      edges.emplace_back(resolve_vertex(e[0], by_name, n), resolve_vertex(e[1], by_name, n));
    }
    std::optional<std::vector<double>> weights;
    if (doc.contains("weights")) weights = doc.at("weights").get<std::vector<double>>();
    std::optional<std::vector<Interval>> intervals;
    if (doc.contains("intervals") && !doc.at("intervals").is_null()) {
      intervals.emplace();
      for (const auto& iv : doc.at("intervals")) {
        if (!iv.is_array() || iv.size() != 2) {
          throw Error(ErrorKind::InvalidInput, "intervals must be [lo, hi] pairs");
        }
        intervals->push_back({iv[0].get<double>(), iv[1].get<double>()});
      }
    }
    if (intervals && !doc.contains("edges")) {
      out.graph = Graph::from_intervals(std::move(*intervals), std::move(weights));
    } else {
      out.graph = Graph::build(n, std::move(edges), std::move(weights), std::move(intervals));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad graph document: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g, const std::vector<std::string>& names,
                          const std::optional<GenConfig>& meta) {
  json doc;
  doc["n"] = g.size();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["weights"] = std::vector<double>(g.weights().begin(), g.weights().end());
  if (g.has_intervals()) {
    json intervals = json::array();
    for (const auto& iv : g.intervals()) intervals.push_back({iv.lo, iv.hi});
    doc["intervals"] = std::move(intervals);
  }
  if (!names.empty()) doc["names"] = names;
  if (meta) {
    doc["meta"] = {
        {"n", meta->n},
        {"d", meta->d},
        {"seed", meta->seed},
        {"dist", std::string(to_string(meta->cost_dist))},
        {"always_add_parent", meta->always_add_parent},
        {"edge_probability", "min(1, (d/i)^(2/3)), clamped at 1 for i <= d"},
        {"cost_quantum", kCostQuantum},
        {"generator", std::string(kGeneratorName)},
    };
  }
  return doc.dump(2) + "\n";
}

Design parse_design_json(std::string_view text, const GraphDocument& graph) {
  const json doc = parse(text);
  const auto n = graph.graph.size();
  const auto by_name = name_index(graph.names);
  try {
    if (doc.contains("rows")) {
      const auto& rows_json = doc.at("rows");
      std::vector<std::optional<Label>> rows(n);
      std::size_t m = doc.value("m", std::size_t{0});
      bool have_m = doc.contains("m");
      for (const auto& [key, bits] : rows_json.items()) {
        const Vertex v = resolve_vertex(json(key), by_name, n);
        auto label = Label::from_string(bits.get<std::string>());
        if (!have_m) {
          m = label.length();
          have_m = true;
        }
        rows[v] = std::move(label);
      }
      std::vector<Label> filled;
      filled.reserve(n);
      for (std::size_t v = 0; v < n; ++v) {
        if (!rows[v]) {
          throw Error(ErrorKind::InvalidInput, "design has no row for vertex " + std::to_string(v));
        }
        filled.push_back(std::move(*rows[v]));
      }
      return Design::from_rows(m, std::move(filled));
    }
    std::vector<VertexSet> sets;
    for (const auto& set : doc.at("interventions")) {
      VertexSet members;
      for (const auto& v : set) members.push_back(resolve_vertex(v, by_name, n));
      sets.push_back(make_vertex_set(std::move(members)));
    }
    const std::size_t m = doc.value("m", sets.size());
    if (m < sets.size()) {
      throw Error(ErrorKind::InvalidInput, "m is smaller than the number of interventions");
    }
    sets.resize(m);
    return Design::from_interventions(n, std::move(sets));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad design document: ") + e.what());
  }
}

std::string design_to_json(const Design& design, double cost,
                           const std::optional<DesignResult>& provenance) {
  json doc;
  doc["m"] = design.m();
  doc["interventions"] = design.nonempty_interventions();
  json rows = json::object();
  for (std::size_t v = 0; v < design.num_vertices(); ++v) {
    rows[std::to_string(v)] = design.row(static_cast<Vertex>(v)).to_string();
  }
  doc["rows"] = std::move(rows);
  doc["cost"] = cost;
  if (provenance) {
    doc["algorithm"] = std::string(to_string(provenance->algorithm));
    doc["optimal"] = provenance->optimal;
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << text;
}

}  // namespace sepdesign
