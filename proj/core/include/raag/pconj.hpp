#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/sil.hpp"

namespace raag {

/// P_v^C: conjugation of the component C of the complement of st(v) by v.
/// `ordinal` is the 1-based position of C in star_complement_components(v).
/// out_trivial marks the single pc of a vertex whose complement is connected.
struct PartialConjugation {
  VertexIndex vertex = 0;
  VertexSet support;
  std::size_t ordinal = 1;
  bool out_trivial = false;
  friend bool operator==(const PartialConjugation&, const PartialConjugation&) = default;
};

/// Tags (1)..(13) of the classification relative to a maximal SIL-pair system.
enum class PCType : int {
  kOutTrivial = 0,
  kType1 = 1,
  kType2,
  kType3,
  kType4,
  kType5,
  kType6,
  kType7,
  kType8,
  kType9,
  kType10,
  kType11,
  kType12,
  kType13,
};

/// "1".."13" or "out_trivial".
std::string pc_type_label(PCType t);

/// "P[v][k]"
std::string pc_name(const SimplicialGraph& g, const PartialConjugation& p);

/// Every (v, C), ordered by vertex then component ordinal.
std::vector<PartialConjugation> enumerate_pcs(const SimplicialGraph& g);
/// enumerate_pcs without the out-trivial entries.
std::vector<PartialConjugation> nontrivial_pcs(const SimplicialGraph& g);

/// Looks up P_v^C; throws InputError when C is not a component of the
/// complement of st(v).
PartialConjugation make_pc(const SimplicialGraph& g, VertexIndex v, const VertexSet& support);

PCType classify_pc(const SimplicialGraph& g, const SilSystemDecomposition& d, const PartialConjugation& p);

/// Type (1).
std::vector<PartialConjugation> dominant_pcs(const SimplicialGraph& g, const SilSystemDecomposition& d);
/// Type (3).
std::vector<PartialConjugation> subordinate_pcs(const SimplicialGraph& g, const SilSystemDecomposition& d);

/// Whether P and Q commute in Out. Out-trivial operands throw InputError.
bool commutes(const SimplicialGraph& g, const PartialConjugation& p, const PartialConjugation& q);

}  // namespace raag
