#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "raag/graph.hpp"

namespace raag {

enum class GraphFormat { kJson, kDot };

/// JSON when the first non-blank character is '{', DOT otherwise.
GraphFormat detect_format(std::string_view text);

/// Vertex order is declaration order (DOT: first mention). Throws ParseError
/// with a 1-based line and column on malformed input, unknown vertices,
/// self-loops and duplicate edges.
SimplicialGraph parse_graph(std::string_view text, GraphFormat format);
SimplicialGraph parse_graph(std::string_view text);

/// {"vertices": [...], "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const SimplicialGraph& g);
std::string serialize_graph(const SimplicialGraph& g, GraphFormat format);

/// Order pairs, equivalence classes, SIL pairs, maximal system and the pc
/// classification table.
nlohmann::json analysis_report(const SimplicialGraph& g);

}  // namespace raag
