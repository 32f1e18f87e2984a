#include "raag/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "raag/errors.hpp"

namespace raag {

VertexSet VertexSet::first_n(std::size_t n) {
  VertexSet s;
  for (std::size_t w = 0; w < kWords && n > 0; ++w) {
    const std::size_t take = std::min<std::size_t>(n, 64);
    s.words_[w] = take == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << take) - 1;
    n -= take;
  }
  return s;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
  return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 const std::vector<std::pair<VertexIndex, VertexIndex>>& edges)
    : names_(std::move(names)), neighbors_(names_.size()) {
  if (names_.size() > kMaxVertices) {
    throw InputError("graph has " + std::to_string(names_.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::unordered_map<std::string_view, VertexIndex> seen;
  for (VertexIndex i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty vertex name");
    if (!seen.emplace(names_[i], i).second) throw InputError("duplicate vertex name '" + names_[i] + "'");
  }
  for (auto [u, v] : edges) {
    if (u >= names_.size() || v >= names_.size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at '" + names_[u] + "'");
    if (neighbors_[u].contains(v)) {
      throw InputError("duplicate edge '" + names_[u] + "' -- '" + names_[v] + "'");
    }
    neighbors_[u].insert(v);
    neighbors_[v].insert(u);
  }
}

SimplicialGraph SimplicialGraph::from_named_edges(
    std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<std::pair<VertexIndex, VertexIndex>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge references unknown vertex '" + a + "'");
    if (ib == index.end()) throw InputError("edge references unknown vertex '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return SimplicialGraph(std::move(names), indexed);
}

std::size_t SimplicialGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : neighbors_) twice += n.size();
  return twice / 2;
}

std::optional<VertexIndex> SimplicialGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex SimplicialGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<VertexIndex, VertexIndex>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex u = 0; u < order(); ++u) {
    for (VertexIndex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void require_vertex(const SimplicialGraph& g, VertexIndex v) {
  if (v >= g.order()) throw InputError("vertex index " + std::to_string(v) + " is not in the graph");
}

VertexSet link(const SimplicialGraph& g, VertexIndex v) {
  require_vertex(g, v);
  return g.neighbors(v);
}

VertexSet star(const SimplicialGraph& g, VertexIndex v) {
  VertexSet s = link(g, v);
  s.insert(v);
  return s;
}

VertexSet link_of_set(const SimplicialGraph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("link of an empty vertex set is undefined");
  VertexSet out = g.vertices();
  for (VertexIndex v : s) out &= link(g, v);
  return out;
}

VertexSet component_containing(const SimplicialGraph& g, const VertexSet& allowed, VertexIndex seed) {
  VertexSet reached;
  if (!allowed.contains(seed)) return reached;
  reached.insert(seed);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexIndex v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<VertexSet> connected_components(const SimplicialGraph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet remaining = s;
  while (!remaining.empty()) {
    VertexSet c = component_containing(g, remaining, remaining.front());
    remaining -= c;
    out.push_back(c);
  }
  return out;
}

std::vector<VertexSet> star_complement_components(const SimplicialGraph& g, VertexIndex v) {
  return connected_components(g, g.vertices() - star(g, v));
}

bool is_connected(const SimplicialGraph& g) {
  return connected_components(g, g.vertices()).size() <= 1;
}

std::vector<std::string> member_names(const SimplicialGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexIndex v : s) out.push_back(g.name(v));
  return out;
}

std::string format_set(const SimplicialGraph& g, const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexIndex v : s) {
    if (!first) os << ", ";
    os << g.name(v);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace raag
