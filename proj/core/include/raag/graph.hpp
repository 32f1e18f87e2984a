#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using VertexIndex = std::size_t;

/// Largest graph accepted anywhere in the library.
inline constexpr std::size_t kMaxVertices = 256;

/// A set of vertex indices of some parent graph, stored as a fixed-width
/// bitset. Iteration visits members in increasing index order.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexIndex*;
    using reference = VertexIndex;

    iterator() = default;
    VertexIndex operator*() const { return current_; }
    iterator& operator++() {
      current_ = owner_->next_member(current_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const { return current_ == other.current_; }

   private:
    friend class VertexSet;
    iterator(const VertexSet* owner, VertexIndex current) : owner_(owner), current_(current) {}
    const VertexSet* owner_ = nullptr;
    VertexIndex current_ = kMaxVertices;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<VertexIndex> members) {
    for (VertexIndex v : members) insert(v);
  }

  static VertexSet singleton(VertexIndex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  /// {0, 1, ..., n-1}
  static VertexSet first_n(std::size_t n);

  bool contains(VertexIndex v) const {
    return v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(VertexIndex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexIndex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Least member; kMaxVertices when empty.
  VertexIndex front() const { return next_member(0); }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders by least member first, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  iterator begin() const { return iterator(this, front()); }
  iterator end() const { return iterator(this, kMaxVertices); }

  std::vector<VertexIndex> to_vector() const { return {begin(), end()}; }

 private:
  VertexIndex next_member(VertexIndex from) const {
    for (std::size_t w = from >> 6; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      if (w == (from >> 6)) bits &= ~std::uint64_t{0} << (from & 63);
      if (bits != 0) return (w << 6) + static_cast<VertexIndex>(std::countr_zero(bits));
    }
    return kMaxVertices;
  }

  std::array<std::uint64_t, kWords> words_{};
};

/// Finite simplicial graph: named vertices in a fixed (input) order and a
/// symmetric irreflexive adjacency relation. Immutable once built.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Throws InputError on duplicate or empty names, too many vertices,
  /// out-of-range endpoints, self-loops or duplicate edges.
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges);

  /// Edges given by vertex names.
  static SimplicialGraph from_named_edges(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t order() const { return names_.size(); }
  std::size_t edge_count() const;

  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexIndex> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  VertexIndex index_of(std::string_view name) const;

  bool adjacent(VertexIndex u, VertexIndex v) const { return neighbors_[u].contains(v); }
  const VertexSet& neighbors(VertexIndex v) const { return neighbors_[v]; }
  VertexSet vertices() const { return VertexSet::first_n(order()); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> neighbors_;
};

/// Throws InputError unless v is a vertex of g.
void require_vertex(const SimplicialGraph& g, VertexIndex v);

/// Neighbours of v.
VertexSet link(const SimplicialGraph& g, VertexIndex v);
/// Neighbours of v together with v.
VertexSet star(const SimplicialGraph& g, VertexIndex v);
/// Intersection of the links of the members of s. Empty s is an input error.
VertexSet link_of_set(const SimplicialGraph& g, const VertexSet& s);

/// Members of `allowed` reachable from `seed` inside the induced subgraph on
/// `allowed`. Empty when seed is not in allowed.
VertexSet component_containing(const SimplicialGraph& g, const VertexSet& allowed, VertexIndex seed);

/// Connected components of the induced subgraph on s, sorted by least member.
std::vector<VertexSet> connected_components(const SimplicialGraph& g, const VertexSet& s);

/// Components of the complement of st(v).
std::vector<VertexSet> star_complement_components(const SimplicialGraph& g, VertexIndex v);

bool is_connected(const SimplicialGraph& g);

/// Readable "{a, b, c}" form using vertex names.
std::string format_set(const SimplicialGraph& g, const VertexSet& s);
std::vector<std::string> member_names(const SimplicialGraph& g, const VertexSet& s);

}  // namespace raag
