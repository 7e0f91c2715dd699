#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepdesign/designer.hpp"
#include "sepdesign/graph.hpp"
#include "sepdesign/randgen.hpp"
#include "sepdesign/sepsys.hpp"

namespace sepdesign {

struct GraphDocument {
  Graph graph;
  std::vector<std::string> names;  // empty when the file carries none
};

// {"n":int, "edges":[[u,v],...], "weights":[...], "intervals":[[l,r],...]?,
//  "names":[...]?}. With names present, edge endpoints may be given by name.
GraphDocument parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g, const std::vector<std::string>& names = {},
                          const std::optional<GenConfig>& meta = std::nullopt);

// {"m":int, "interventions":[[v,...],...], "rows":{"v":"bits",...}, "cost":x}.
// Rows take precedence over interventions when both are present. Empty
// interventions are omitted on output.
Design parse_design_json(std::string_view text, const GraphDocument& graph);
std::string design_to_json(const Design& design, double cost,
                           const std::optional<DesignResult>& provenance = std::nullopt);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace sepdesign
