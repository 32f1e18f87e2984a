#include "raag/order.hpp"

#include "raag/errors.hpp"

namespace raag {

bool leq(const SimplicialGraph& g, VertexIndex v, VertexIndex w) {
  require_vertex(g, v);
  require_vertex(g, w);
  if (v == w) throw InputError("the link-star order compares distinct vertices only");
  return link(g, v).is_subset_of(star(g, w));
}

std::vector<OrderPair> order_pairs(const SimplicialGraph& g) {
  std::vector<OrderPair> out;
  for (VertexIndex v = 0; v < g.order(); ++v) {
    for (VertexIndex w = 0; w < g.order(); ++w) {
      if (v != w && leq(g, v, w)) out.push_back({v, w});
    }
  }
  return out;
}

std::vector<EquivClass> equivalence_classes(const SimplicialGraph& g) {
  std::vector<EquivClass> out;
  VertexSet assigned;
  for (VertexIndex v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) continue;
    VertexSet members = VertexSet::singleton(v);
    for (VertexIndex w = v + 1; w < g.order(); ++w) {
      if (leq(g, v, w) && leq(g, w, v)) members.insert(w);
    }
    assigned |= members;
    out.push_back({members, v});
  }
  return out;
}

VertexSet maximal_vertices(const SimplicialGraph& g) {
  VertexSet out = g.vertices();
  for (const OrderPair& p : order_pairs(g)) {
    if (!leq(g, p.upper, p.lower)) out.erase(p.lower);
  }
  return out;
}

std::optional<VertexIndex> leaf_like(const SimplicialGraph& g, VertexIndex v) {
  require_vertex(g, v);
  const VertexSet maximal_in_link = maximal_vertices(g) & g.neighbors(v);
  if (maximal_in_link.size() != 1) return std::nullopt;
  const VertexIndex w = maximal_in_link.front();
  // [v] <= [w] on classes is v <= w on representatives.
  if (!leq(g, v, w)) return std::nullopt;
  return w;
}

std::vector<TransvectionSpec> transvections(const SimplicialGraph& g) {
  std::vector<TransvectionSpec> out;
  for (const OrderPair& p : order_pairs(g)) {
    out.push_back({p.lower, p.upper, TransvectionSide::kRight});
    out.push_back({p.lower, p.upper, TransvectionSide::kLeft});
  }
  return out;
}

std::size_t related_pair_count(const SimplicialGraph& g) {
  std::size_t n = 0;
  for (VertexIndex v = 0; v < g.order(); ++v) {
    for (VertexIndex w = v + 1; w < g.order(); ++w) {
      if (leq(g, v, w) || leq(g, w, v)) ++n;
    }
  }
  return n;
}

}  // namespace raag
