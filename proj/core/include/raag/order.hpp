#pragma once

#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// lower <= upper in the link-star order: lk(lower) is contained in st(upper).
struct OrderPair {
  VertexIndex lower;
  VertexIndex upper;
  friend bool operator==(const OrderPair&, const OrderPair&) = default;
  friend auto operator<=>(const OrderPair&, const OrderPair&) = default;
};

struct EquivClass {
  VertexSet members;
  VertexIndex representative;  // least member
  friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

enum class TransvectionSide { kRight, kLeft };

/// R_{moved,by} (right) sends moved to moved*by; L_{moved,by} sends it to by*moved.
struct TransvectionSpec {
  VertexIndex moved;
  VertexIndex by;
  TransvectionSide side = TransvectionSide::kRight;
  friend bool operator==(const TransvectionSpec&, const TransvectionSpec&) = default;
};

/// Only defined for distinct vertices; v == w throws InputError.
bool leq(const SimplicialGraph& g, VertexIndex v, VertexIndex w);

/// All ordered pairs (v, w), v != w, with v <= w; sorted by (lower, upper).
std::vector<OrderPair> order_pairs(const SimplicialGraph& g);

/// Classes of mutual <=, each a singleton when a vertex is related to no other.
/// Sorted by representative.
std::vector<EquivClass> equivalence_classes(const SimplicialGraph& g);

/// Vertices v such that every w with v <= w also has w <= v.
VertexSet maximal_vertices(const SimplicialGraph& g);

/// The unique maximal vertex w of lk(v) with [v] <= [w], when it exists.
std::optional<VertexIndex> leaf_like(const SimplicialGraph& g, VertexIndex v);

/// Every transvection R_{vw} and L_{vw} with v <= w.
std::vector<TransvectionSpec> transvections(const SimplicialGraph& g);

/// Unordered pairs {v, w} with v <= w or w <= v.
std::size_t related_pair_count(const SimplicialGraph& g);

}  // namespace raag
