#include "raag/pconj.hpp"

#include "raag/errors.hpp"

namespace raag {

std::string pc_type_label(PCType t) {
  if (t == PCType::kOutTrivial) return "out_trivial";
  return std::to_string(static_cast<int>(t));
}

std::string pc_name(const SimplicialGraph& g, const PartialConjugation& p) {
  return "P[" + g.name(p.vertex) + "][" + std::to_string(p.ordinal) + "]";
}

std::vector<PartialConjugation> enumerate_pcs(const SimplicialGraph& g) {
  std::vector<PartialConjugation> out;
  for (VertexIndex v = 0; v < g.order(); ++v) {
    const auto comps = star_complement_components(g, v);
    for (std::size_t k = 0; k < comps.size(); ++k)
      out.push_back({v, comps[k], k + 1, comps.size() == 1});
  }
  return out;
}

std::vector<PartialConjugation> nontrivial_pcs(const SimplicialGraph& g) {
  std::vector<PartialConjugation> out;
  for (auto& p : enumerate_pcs(g))
    if (!p.out_trivial) out.push_back(std::move(p));
  return out;
}

PartialConjugation make_pc(const SimplicialGraph& g, VertexIndex v, const VertexSet& support) {
  require_vertex(g, v);
  const auto comps = star_complement_components(g, v);
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (comps[k] == support) return {v, support, k + 1, comps.size() == 1};
  throw InputError(format_set(g, support) + " is not a component of the complement of st(" + g.name(v) + ")");
}

namespace {

void require_consistent(const SimplicialGraph& g, const PartialConjugation& p) {
  const PartialConjugation ref = make_pc(g, p.vertex, p.support);
  if (ref != p) throw InputError("partial conjugation does not match the graph");
}

[[noreturn]] void fall_through(const SimplicialGraph& g, const PartialConjugation& p) {
  throw DefectError("no classification case matches " + pc_name(g, p) + " = " + format_set(g, p.support));
}

}  // namespace

PCType classify_pc(const SimplicialGraph& g, const SilSystemDecomposition& d, const PartialConjugation& p) {
  require_consistent(g, p);
  if (p.out_trivial) return PCType::kOutTrivial;
  const VertexSet& core = d.core();
  const VertexSet& c = p.support;
  const VertexIndex v = p.vertex;
  const auto equals_additional = [&]() {
    for (const auto& dj : d.additional_components)
      if (c == dj) return true;
    return false;
  };

  if (auto i = d.shared_index_of(v)) {
    const VertexSet& ci = d.shared_components[*i];
    if (core.is_subset_of(g.neighbors(v))) {
      for (std::size_t k = 0; k < d.shared_components.size(); ++k)
        if (k != *i && c == d.shared_components[k]) return PCType::kType1;
      if (equals_additional()) return PCType::kType2;
      if (c.is_subset_of(ci)) {
        for (VertexIndex w : c)
          if (core.is_subset_of(g.neighbors(w))) return PCType::kType3;
        return PCType::kType4;
      }
      fall_through(g, p);
    }
    if (c.is_subset_of(ci)) return PCType::kType5;
    if (equals_additional()) return PCType::kType6;
    if (c.intersects(core) || !(c - ci).empty()) return PCType::kType7;
    fall_through(g, p);
  }

  if (core.contains(v)) {
    if (c.intersects(core)) return PCType::kType8;
    for (const auto& ci : d.shared_components)
      if (c.is_subset_of(ci) && c != ci) return PCType::kType9;
    // equality with a whole D_j is possible when v is adjacent to the other core vertices
    for (const auto& dj : d.additional_components)
      if (c.is_subset_of(dj)) return PCType::kType10;
    fall_through(g, p);
  }

  if (auto j = d.additional_index_of(v)) {
    const VertexSet& dj = d.additional_components[*j];
    if (c.is_subset_of(dj)) return PCType::kType11;
    for (std::size_t k = 0; k < d.additional_components.size(); ++k)
      if (k != *j && c == d.additional_components[k]) return PCType::kType12;
    bool all_pivots = true;
    for (VertexIndex w : d.system.pivots) all_pivots = all_pivots && c.contains(w);
    if (all_pivots) return PCType::kType13;
    fall_through(g, p);
  }
  throw InputError("vertex " + g.name(v) + " is not covered by the decomposition");
}

namespace {

std::vector<PartialConjugation> filter_type(const SimplicialGraph& g, const SilSystemDecomposition& d, PCType t) {
  std::vector<PartialConjugation> out;
  for (auto& p : nontrivial_pcs(g))
    if (classify_pc(g, d, p) == t) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<PartialConjugation> dominant_pcs(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  return filter_type(g, d, PCType::kType1);
}

std::vector<PartialConjugation> subordinate_pcs(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  return filter_type(g, d, PCType::kType3);
}

bool commutes(const SimplicialGraph& g, const PartialConjugation& p, const PartialConjugation& q) {
  require_consistent(g, p);
  require_consistent(g, q);
  if (p.out_trivial || q.out_trivial) throw InputError("commutes is defined for pcs nontrivial in Out");
  const VertexIndex a = p.vertex;
  const VertexIndex b = q.vertex;
  if (a == b || g.adjacent(a, b)) return true;
  if (!is_sil_pair(g, a, b)) return true;
  const auto cls = classify_pair(g, a, b);
  const ComponentRole rp = component_role(cls, a, p.support);
  const ComponentRole rq = component_role(cls, b, q.support);
  using R = ComponentRole;
  if (rp == R::kDominating && (rq == R::kDominating || rq == R::kShared)) return false;
  if (rp == R::kShared && rq == R::kDominating) return false;
  if (rp == R::kShared && rq == R::kShared && p.support == q.support) return false;
  return true;
}

}  // namespace raag
