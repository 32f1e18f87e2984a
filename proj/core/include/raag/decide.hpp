#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raag/graph.hpp"
#include "raag/sil.hpp"

namespace raag {

enum class Status { kYes, kNo, kUnknown, kNotApplicable };

/// "yes", "no", "unknown", "not_applicable"
std::string status_name(Status s);

struct Verdict {
  Status out_status = Status::kUnknown;
  Status pso_status = Status::kUnknown;
};

/// Rule identifiers, one per decision.
namespace rules {
inline constexpr const char* kNoSil = "no_sil";
inline constexpr const char* kConnectedSilOnly = "connected_sil_only";
inline constexpr const char* kCoreSingleton = "core_singleton";
inline constexpr const char* kWithAddCpnts = "withaddcpnts";
inline constexpr const char* kOneAdditional = "one_additional_component";
inline constexpr const char* kStructureOfPso = "structureofPSO";
inline constexpr const char* kBeingAhCor = "beingAHcor";
inline constexpr const char* kSemidirect = "semidirect";
inline constexpr const char* kUndecided = "undecided";
}  // namespace rules

struct Decision {
  Verdict verdict;
  std::string rule;
  nlohmann::json certificate;
  std::vector<std::string> warnings;
};

struct TrivialityResult {
  bool trivial;
  nlohmann::json certificate;  // offending pcs and strict order pairs
};

/// Whether the nilpotent kernel P is trivial. Needs a SIL-free graph.
TrivialityResult p_is_trivial(const SimplicialGraph& g);

/// Complete answer for SIL-free graphs; throws PreconditionError otherwise.
Decision no_sil_rule(const SimplicialGraph& g);

/// Fires iff |core| = 1 on a connected graph.
std::optional<Decision> core_singleton_rule(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// The corollary's extra clause: each subordinate support contains every
/// other subordinate-defining vertex of its shared component. Returns the
/// first violation.
std::optional<std::string> corollary_support_violation(const SimplicialGraph& g, const SilSystemDecomposition& d);

Decision decide(const SimplicialGraph& g);

nlohmann::json decision_to_json(const Decision& d);

/// JSON helpers shared with the CLI.
nlohmann::json names_json(const SimplicialGraph& g, const VertexSet& s);
nlohmann::json system_json(const SimplicialGraph& g, const SilSystemDecomposition& d);

}  // namespace raag
