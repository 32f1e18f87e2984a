#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raag/graph.hpp"

namespace raag {

/// Re-checks a serialized decision (decision_to_json output) against the
/// graph using link/star/component primitives only. Returns the problems
/// found; empty means the certificate supports the verdict.
std::vector<std::string> verify_decision(const SimplicialGraph& g, const nlohmann::json& decision);

}  // namespace raag
