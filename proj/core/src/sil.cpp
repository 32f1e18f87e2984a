#include "raag/sil.hpp"

#include <algorithm>
#include <limits>

#include "raag/errors.hpp"

namespace raag {

namespace {

VertexSet common_link(const SimplicialGraph& g, VertexIndex a, VertexIndex b) {
  return g.neighbors(a) & g.neighbors(b);
}

void require_distinct(const SimplicialGraph& g, VertexIndex a, VertexIndex b) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) throw InputError("pair needs two distinct vertices");
}

}  // namespace

ComponentRole component_role(const PairComponentClassification& c, VertexIndex owner,
                             const VertexSet& component) {
  if (owner != c.a && owner != c.b) throw InputError("owner is not a member of the classified pair");
  const VertexSet& dominating = owner == c.a ? c.dominating_a : c.dominating_b;
  if (component == dominating) return ComponentRole::kDominating;
  if (std::find(c.shared.begin(), c.shared.end(), component) != c.shared.end()) return ComponentRole::kShared;
  const auto& sub = owner == c.a ? c.subordinate_a : c.subordinate_b;
  if (std::find(sub.begin(), sub.end(), component) != sub.end()) return ComponentRole::kSubordinate;
  throw InputError("set is not a star-complement component of the owner");
}

std::optional<std::size_t> SilSystemDecomposition::shared_index_of(VertexIndex v) const {
  for (std::size_t i = 0; i < shared_components.size(); ++i)
    if (shared_components[i].contains(v)) return i;
  return std::nullopt;
}

std::optional<std::size_t> SilSystemDecomposition::additional_index_of(VertexIndex v) const {
  for (std::size_t j = 0; j < additional_components.size(); ++j)
    if (additional_components[j].contains(v)) return j;
  return std::nullopt;
}

bool is_sil_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b) {
  require_distinct(g, a, b);
  if (g.adjacent(a, b)) return false;
  const VertexSet allowed = g.vertices() - common_link(g, a, b);
  const VertexSet reached = component_containing(g, allowed, a) | component_containing(g, allowed, b);
  return !(allowed - reached).empty();
}

bool is_separated_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b) {
  require_distinct(g, a, b);
  if (g.adjacent(a, b)) return false;
  const VertexSet allowed = g.vertices() - common_link(g, a, b);
  return !component_containing(g, allowed, a).contains(b);
}

PairComponentClassification classify_pair(const SimplicialGraph& g, VertexIndex a, VertexIndex b) {
  require_distinct(g, a, b);
  if (g.adjacent(a, b)) throw InputError("classify_pair needs nonadjacent vertices");
  PairComponentClassification c;
  c.a = a;
  c.b = b;
  const auto comps_a = star_complement_components(g, a);
  const auto comps_b = star_complement_components(g, b);
  for (const auto& comp : comps_a) {
    if (comp.contains(b)) {
      c.dominating_a = comp;
    } else if (std::find(comps_b.begin(), comps_b.end(), comp) != comps_b.end()) {
      c.shared.push_back(comp);
    } else {
      c.subordinate_a.push_back(comp);
    }
  }
  for (const auto& comp : comps_b) {
    if (comp.contains(a)) {
      c.dominating_b = comp;
    } else if (std::find(comps_a.begin(), comps_a.end(), comp) == comps_a.end()) {
      c.subordinate_b.push_back(comp);
    }
  }
  return c;
}

std::vector<std::pair<VertexIndex, VertexIndex>> sil_pairs(const SimplicialGraph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex a = 0; a < g.order(); ++a)
    for (VertexIndex b = a + 1; b < g.order(); ++b)
      if (is_sil_pair(g, a, b)) out.emplace_back(a, b);
  return out;
}

bool has_sil_pair(const SimplicialGraph& g) {
  for (VertexIndex a = 0; a < g.order(); ++a)
    for (VertexIndex b = a + 1; b < g.order(); ++b)
      if (is_sil_pair(g, a, b)) return true;
  return false;
}

std::vector<std::pair<VertexIndex, VertexIndex>> separated_sil_pairs(const SimplicialGraph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex a = 0; a < g.order(); ++a)
    for (VertexIndex b = a + 1; b < g.order(); ++b)
      if (is_sil_pair(g, a, b) && is_separated_pair(g, a, b)) out.emplace_back(a, b);
  return out;
}

bool all_sil_pairs_connected(const SimplicialGraph& g) {
  return has_sil_pair(g) && separated_sil_pairs(g).empty();
}

SilSystemDecomposition decompose(const SimplicialGraph& g, std::vector<VertexIndex> pivots) {
  if (pivots.size() < 2) throw InputError("a SIL-pair system has at least two pivots");
  SilSystemDecomposition d;
  VertexSet pivot_set;
  for (VertexIndex w : pivots) {
    require_vertex(g, w);
    pivot_set.insert(w);
  }
  d.system.core = link_of_set(g, pivot_set);
  d.system.pivots = std::move(pivots);
  const VertexSet rest = g.vertices() - d.system.core;
  for (VertexIndex w : d.system.pivots) d.shared_components.push_back(component_containing(g, rest, w));
  for (const auto& comp : connected_components(g, rest))
    if (!comp.intersects(pivot_set)) d.additional_components.push_back(comp);
  return d;
}

namespace {

SilSystemDecomposition grow_system(const SimplicialGraph& g, VertexIndex w1, VertexIndex w2) {
  std::vector<VertexIndex> pivots{w1, w2};
  VertexSet pivot_set{w1, w2};
  const auto cls = classify_pair(g, w1, w2);
  for (;;) {
    VertexSet candidates;
    for (const auto& comp : cls.shared)
      if (!comp.intersects(pivot_set)) candidates |= comp;
    std::optional<VertexIndex> next;
    for (VertexIndex x : candidates) {
      if (is_sil_pair(g, w1, x) && is_separated_pair(g, w1, x)) {
        next = x;
        break;
      }
    }
    if (!next) break;
    pivots.push_back(*next);
    pivot_set.insert(*next);
  }
  return decompose(g, std::move(pivots));
}

// Extension over every component of G - core, not only shared components of (w1,w2).
SilSystemDecomposition grow_system_wide(const SimplicialGraph& g, VertexIndex w1, VertexIndex w2) {
  std::vector<VertexIndex> pivots{w1, w2};
  VertexSet pivot_set{w1, w2};
  const VertexSet core = common_link(g, w1, w2);
  const VertexSet rest = g.vertices() - core;
  for (bool grown = true; grown;) {
    grown = false;
    VertexSet taken;
    for (VertexIndex w : pivots) taken |= component_containing(g, rest, w);
    for (VertexIndex x : rest - taken) {
      bool ok = true;
      for (VertexIndex w : pivots) {
        if (!is_sil_pair(g, w, x) || common_link(g, w, x) != core || !is_separated_pair(g, w, x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pivots.push_back(x);
      pivot_set.insert(x);
      grown = true;
      break;
    }
  }
  return decompose(g, std::move(pivots));
}

}  // namespace

std::vector<std::string> system_violations(const SimplicialGraph& g, const SilSystemDecomposition& d) {
  std::vector<std::string> out;
  const auto& pivots = d.system.pivots;
  const VertexSet& core = d.system.core;
  auto pair_text = [&](VertexIndex a, VertexIndex b) { return "(" + g.name(a) + "," + g.name(b) + ")"; };

  for (std::size_t j = 0; j < pivots.size(); ++j) {
    for (std::size_t k = j + 1; k < pivots.size(); ++k) {
      if (pivots[j] == pivots[k] || !is_sil_pair(g, pivots[j], pivots[k]))
        out.push_back("pivots " + pair_text(pivots[j], pivots[k]) + " are not a SIL-pair");
      else if (common_link(g, pivots[j], pivots[k]) != core)
        out.push_back("lk" + pair_text(pivots[j], pivots[k]) + " differs from the core");
    }
  }
  const std::size_t core_size = core.size();
  for (const auto& [v, w] : separated_sil_pairs(g))
    if (common_link(g, v, w).size() < core_size)
      out.push_back("separated pair " + pair_text(v, w) + " has a smaller common link");

  const VertexSet rest = g.vertices() - core;
  VertexSet pivot_set;
  for (VertexIndex w : pivots) pivot_set.insert(w);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const VertexSet comp = component_containing(g, rest, pivots[i]);
    if (comp.empty() || (comp & pivot_set) != VertexSet::singleton(pivots[i]))
      out.push_back("component of " + g.name(pivots[i]) + " is not private");
  }
  for (const auto& comp : connected_components(g, rest)) {
    if (comp.intersects(pivot_set)) continue;
    for (VertexIndex v : comp)
      for (VertexIndex w : pivots)
        if (is_sil_pair(g, v, w)) out.push_back("additional vertex pair " + pair_text(v, w) + " is a SIL-pair");
  }

  VertexSet cover = core;
  std::size_t total = core.size();
  for (const auto& c : d.shared_components) {
    cover |= c;
    total += c.size();
  }
  for (const auto& c : d.additional_components) {
    cover |= c;
    total += c.size();
  }
  if (cover != g.vertices() || total != g.order()) out.push_back("decomposition is not a disjoint cover");
  return out;
}

std::optional<SilSystemDecomposition> maximal_sil_system(const SimplicialGraph& g) {
  const auto separated = separated_sil_pairs(g);
  if (separated.empty()) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [a, b] : separated) best = std::min(best, common_link(g, a, b).size());
  for (auto grow : {grow_system, grow_system_wide}) {
    for (const auto& [a, b] : separated) {
      if (common_link(g, a, b).size() != best) continue;
      auto d = grow(g, a, b);
      if (system_violations(g, d).empty()) return d;
    }
  }
  return std::nullopt;
}

std::vector<VhatComponent> vhat_components(const SimplicialGraph& g, VertexIndex v) {
  require_vertex(g, v);
  if (!is_connected(g)) throw InputError("v-hat components need a connected graph");
  const VertexSet st = star(g, v);
  VertexSet unseen = g.vertices();
  std::vector<VhatComponent> out;
  while (!unseen.empty()) {
    const VertexIndex seed = unseen.front();
    VertexSet cls = VertexSet::singleton(seed);
    VertexSet frontier = cls;
    while (!frontier.empty()) {
      VertexSet next;
      for (VertexIndex x : frontier) {
        VertexSet nb = g.neighbors(x);
        if (st.contains(x)) nb -= st;
        next |= nb;
      }
      next -= cls;
      cls |= next;
      frontier = next;
    }
    unseen -= cls;
    out.push_back({cls, cls.is_subset_of(st)});
  }
  return out;
}

std::vector<KerPGenerator> ker_p_generators(const SimplicialGraph& g) {
  if (!is_connected(g)) throw InputError("ker P generators need a connected graph");
  std::vector<KerPGenerator> out;
  for (VertexIndex v = 0; v < g.order(); ++v) {
    if (auto w = leaf_like(g, v)) {
      KerPGenerator gen;
      gen.kind = KerPGeneratorKind::kLeafTransvection;
      gen.transvection = TransvectionSpec{v, *w, TransvectionSide::kRight};
      out.push_back(gen);
    }
  }
  for (VertexIndex v = 0; v < g.order(); ++v) {
    std::vector<VertexSet> nontrivial;
    for (const auto& c : vhat_components(g, v))
      if (!c.trivial) nontrivial.push_back(c.members);
    // with a single nontrivial class the conjugation is inner
    if (nontrivial.size() < 2) continue;
    for (const auto& comp : nontrivial) {
      KerPGenerator gen;
      gen.kind = KerPGeneratorKind::kVhatConjugation;
      gen.vertex = v;
      gen.component = comp;
      out.push_back(gen);
    }
  }
  return out;
}

}  // namespace raag
