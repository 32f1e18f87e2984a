#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/order.hpp"

namespace raag {

/// Split of the star-complement components of a nonadjacent pair (a, b).
/// The dominating component of a contains b and vice versa; shared components
/// occur in both lists; the rest are subordinate.
struct PairComponentClassification {
  VertexIndex a = 0;
  VertexIndex b = 0;
  VertexSet dominating_a;
  VertexSet dominating_b;
  std::vector<VertexSet> subordinate_a;
  std::vector<VertexSet> subordinate_b;
  std::vector<VertexSet> shared;
};

enum class ComponentRole { kDominating, kShared, kSubordinate };

/// Role of `component` (a component of the complement of st(owner)) with
/// respect to the classified pair; owner must be c.a or c.b.
ComponentRole component_role(const PairComponentClassification& c, VertexIndex owner,
                             const VertexSet& component);

struct SilSystem {
  std::vector<VertexIndex> pivots;
  VertexSet core;  // intersection of the pivots' links
};

/// Vertex decomposition induced by a maximal SIL-pair system: the core, the
/// simultaneously shared components (shared_components[i] contains pivot i)
/// and the additional components.
struct SilSystemDecomposition {
  SilSystem system;
  std::vector<VertexSet> shared_components;
  std::vector<VertexSet> additional_components;

  std::size_t pivot_count() const { return system.pivots.size(); }
  const VertexSet& core() const { return system.core; }
  std::optional<std::size_t> shared_index_of(VertexIndex v) const;
  std::optional<std::size_t> additional_index_of(VertexIndex v) const;
};

enum class KerPGeneratorKind { kLeafTransvection, kVhatConjugation };

struct KerPGenerator {
  KerPGeneratorKind kind = KerPGeneratorKind::kLeafTransvection;
  TransvectionSpec transvection{};  // leaf transvections
  VertexIndex vertex = 0;           // v-hat conjugations: conjugating vertex
  VertexSet component;              // v-hat conjugations: conjugated class
};

struct VhatComponent {
  VertexSet members;
  bool trivial;  // lies inside st(v)
};

/// Nonadjacent a, b such that some component of the complement of
/// lk(a) & lk(b) avoids both. a == b throws InputError.
bool is_sil_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b);

/// a and b lie in different components of the complement of lk(a) & lk(b).
/// Only meaningful for SIL-pairs; callers test is_sil_pair first.
bool is_separated_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b);

/// Throws InputError for adjacent or equal vertices.
PairComponentClassification classify_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b);

/// All SIL-pairs (a, b) with a < b, lexicographic.
std::vector<std::pair<VertexIndex, VertexIndex>> sil_pairs(const SimplicialGraph& g);
bool has_sil_pair(const SimplicialGraph& g);

/// SIL-pairs whose members are separated by lk(a) & lk(b).
std::vector<std::pair<VertexIndex, VertexIndex>> separated_sil_pairs(const SimplicialGraph& g);

/// True iff SIL-pairs exist but none is separated.
bool all_sil_pairs_connected(const SimplicialGraph& g);

/// Greedy construction of a maximal SIL-pair system. Empty when the graph has
/// no separated SIL-pair, or when no grown candidate meets every defining
/// condition (some vertex off the pivot components still forms a SIL-pair
/// with a pivot). Anything returned has passed system_violations.
std::optional<SilSystemDecomposition> maximal_sil_system(const SimplicialGraph& g);

/// Defining conditions of a maximal SIL-pair system that `d` violates
/// (human-readable, empty when all hold). Also checks the vertex cover.
std::vector<std::string> system_violations(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// Decomposition of the vertex set relative to a given list of pivots.
SilSystemDecomposition decompose(const SimplicialGraph& g, std::vector<VertexIndex> pivots);

/// Classes of the relation "joined by an edge path using no edge with both
/// ends in st(v)". Requires g connected.
std::vector<VhatComponent> vhat_components(const SimplicialGraph& g, VertexIndex v);

/// Leaf transvections and v-hat component conjugations that are nontrivial in
/// Out. Requires g connected.
std::vector<KerPGenerator> ker_p_generators(const SimplicialGraph& g);

}  // namespace raag
