#pragma once

// Brute-force reference implementations over an adjacency matrix. Nothing
// here calls into the library except to read a graph's vertices and edges.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace oracle {

using Set = std::set<int>;

struct Adj {
  int n = 0;
  std::vector<std::vector<char>> a;

  bool adj(int u, int v) const { return a[u][v] != 0; }
};

inline Adj from_graph(const raag::SimplicialGraph& g) {
  Adj m;
  m.n = static_cast<int>(g.order());
  m.a.assign(m.n, std::vector<char>(m.n, 0));
  for (auto [u, v] : g.edges()) {
    m.a[u][v] = 1;
    m.a[v][u] = 1;
  }
  return m;
}

inline Set to_set(const raag::VertexSet& s) {
  Set out;
  for (auto v : s) out.insert(static_cast<int>(v));
  return out;
}

inline Set all(const Adj& m) {
  Set s;
  for (int v = 0; v < m.n; ++v) s.insert(v);
  return s;
}

inline Set link(const Adj& m, int v) {
  Set s;
  for (int u = 0; u < m.n; ++u)
    if (m.adj(v, u)) s.insert(u);
  return s;
}

inline Set star(const Adj& m, int v) {
  Set s = link(m, v);
  s.insert(v);
  return s;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool disjoint(const Set& a, const Set& b) { return meet(a, b).empty(); }

// Depth-first search restricted to `allowed`; parts sorted by least member.
inline std::vector<Set> components(const Adj& m, const Set& allowed) {
  std::vector<Set> out;
  Set seen;
  for (int s : allowed) {
    if (seen.count(s)) continue;
    Set comp;
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (int w : allowed)
        if (m.adj(u, w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end(), [](const Set& x, const Set& y) { return *x.begin() < *y.begin(); });
  return out;
}

inline std::vector<Set> star_complement(const Adj& m, int v) { return components(m, minus(all(m), star(m, v))); }

inline bool leq(const Adj& m, int v, int w) { return subset(link(m, v), star(m, w)); }

inline bool is_sil(const Adj& m, int a, int b) {
  if (a == b || m.adj(a, b)) return false;
  for (const Set& c : components(m, minus(all(m), meet(link(m, a), link(m, b)))))
    if (!c.count(a) && !c.count(b)) return true;
  return false;
}

inline bool separated(const Adj& m, int a, int b) {
  for (const Set& c : components(m, minus(all(m), meet(link(m, a), link(m, b)))))
    if (c.count(a)) return !c.count(b);
  return false;
}

struct PairSplit {
  Set dom_a, dom_b;
  std::vector<Set> sub_a, sub_b, shared;
};

inline PairSplit classify(const Adj& m, int a, int b) {
  PairSplit s;
  const auto ca = star_complement(m, a);
  const auto cb = star_complement(m, b);
  for (const Set& c : ca) {
    if (c.count(b))
      s.dom_a = c;
    else if (std::find(cb.begin(), cb.end(), c) != cb.end())
      s.shared.push_back(c);
    else
      s.sub_a.push_back(c);
  }
  for (const Set& c : cb) {
    if (c.count(a))
      s.dom_b = c;
    else if (std::find(ca.begin(), ca.end(), c) == ca.end())
      s.sub_b.push_back(c);
  }
  return s;
}

// Checks the five defining conditions of a maximal SIL-pair system with the
// given pivots and core, plus the cover by core, shared and additional parts.
inline std::vector<std::string> system_problems(const Adj& m, const std::vector<int>& pivots, const Set& core,
                                                const std::vector<Set>& shared, const std::vector<Set>& additional) {
  std::vector<std::string> bad;
  if (pivots.size() < 2) bad.push_back("fewer than two pivots");
  Set common = all(m);
  for (int w : pivots) common = meet(common, link(m, w));
  if (common != core) bad.push_back("core is not the common link");
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t k = j + 1; k < pivots.size(); ++k) {
      if (!is_sil(m, pivots[j], pivots[k])) bad.push_back("bullet 1");
      if (meet(link(m, pivots[j]), link(m, pivots[k])) != common) bad.push_back("bullet 2");
    }
  for (int v = 0; v < m.n; ++v)
    for (int w = v + 1; w < m.n; ++w)
      if (is_sil(m, v, w) && separated(m, v, w) && meet(link(m, v), link(m, w)).size() < common.size())
        bad.push_back("bullet 3");
  const auto comps = components(m, minus(all(m), common));
  std::vector<Set> with_pivot, without;
  for (const Set& c : comps) {
    int count = 0;
    for (int w : pivots) count += static_cast<int>(c.count(w));
    if (count > 1) bad.push_back("bullet 4");
    (count ? with_pivot : without).push_back(c);
  }
  for (const Set& c : without)
    for (int v : c)
      for (int w : pivots)
        if (is_sil(m, v, w)) bad.push_back("bullet 5");
  for (std::size_t i = 0; i < pivots.size() && i < shared.size(); ++i)
    if (!shared[i].count(pivots[i])) bad.push_back("pivot outside its shared component");
  auto sorted = [](std::vector<Set> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(shared) != sorted(with_pivot)) bad.push_back("shared components differ");
  if (sorted(additional) != sorted(without)) bad.push_back("additional components differ");
  Set cover = core;
  std::size_t total = core.size();
  for (const Set& c : shared) cover.insert(c.begin(), c.end()), total += c.size();
  for (const Set& c : additional) cover.insert(c.begin(), c.end()), total += c.size();
  if (cover != all(m) || total != cover.size()) bad.push_back("not a disjoint cover");
  return bad;
}

// Brute force over every pivot subset of size >= 2. Small graphs only.
inline bool system_exists(const Adj& m) {
  for (unsigned mask = 0; mask < (1u << m.n); ++mask) {
    std::vector<int> pivots;
    for (int v = 0; v < m.n; ++v)
      if (mask >> v & 1u) pivots.push_back(v);
    if (pivots.size() < 2) continue;
    Set core = all(m);
    for (int w : pivots) core = meet(core, link(m, w));
    const auto comps = components(m, minus(all(m), core));
    std::vector<Set> shared, additional;
    for (int w : pivots)
      for (const Set& c : comps)
        if (c.count(w)) shared.push_back(c);
    for (const Set& c : comps) {
      bool hit = false;
      for (int w : pivots) hit = hit || c.count(w) != 0;
      if (!hit) additional.push_back(c);
    }
    if (system_problems(m, pivots, core, shared, additional).empty()) return true;
  }
  return false;
}

// Tags (1)..(13) whose clause holds literally, for v's component C. Tag (10)
// also admits C equal to an additional component.
inline std::vector<int> matching_tags(const Adj& m, const Set& core, const std::vector<Set>& shared,
                                      const std::vector<Set>& additional, const std::vector<int>& pivots, int v,
                                      const Set& c) {
  std::vector<int> tags;
  const bool core_in_link = subset(core, link(m, v));
  auto in_link_of = [&](int w) { return subset(core, link(m, w)); };
  for (std::size_t i = 0; i < shared.size(); ++i) {
    if (!shared[i].count(v)) continue;
    bool other_shared = false;
    Set others;
    for (std::size_t k = 0; k < shared.size(); ++k)
      if (k != i) {
        if (c == shared[k]) other_shared = true;
        others.insert(shared[k].begin(), shared[k].end());
      }
    const bool is_additional = std::find(additional.begin(), additional.end(), c) != additional.end();
    const bool inside = subset(c, shared[i]);
    if (core_in_link) {
      if (other_shared) tags.push_back(1);
      if (is_additional) tags.push_back(2);
      if (inside) {
        bool some = false;
        for (int w : c) some = some || in_link_of(w);
        tags.push_back(some ? 3 : 4);
      }
    } else {
      if (inside) tags.push_back(5);
      if (is_additional) tags.push_back(6);
      if (subset(others, c)) tags.push_back(7);
    }
  }
  if (core.count(v)) {
    if (!disjoint(c, core)) tags.push_back(8);
    for (const Set& ci : shared)
      if (subset(c, ci) && c != ci) tags.push_back(9);
    for (const Set& dj : additional)
      if (subset(c, dj)) tags.push_back(10);
  }
  for (std::size_t j = 0; j < additional.size(); ++j) {
    if (!additional[j].count(v)) continue;
    if (subset(c, additional[j]) && c != additional[j]) tags.push_back(11);
    for (std::size_t k = 0; k < additional.size(); ++k)
      if (k != j && c == additional[k]) tags.push_back(12);
    bool all_pivots = true;
    for (int w : pivots) all_pivots = all_pivots && c.count(w);
    if (all_pivots) tags.push_back(13);
  }
  return tags;
}

inline raag::SimplicialGraph random_graph(std::mt19937_64& rng, int max_n = 8) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  const int n = size(rng);
  const double p = density(rng);
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<raag::VertexIndex, raag::VertexIndex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) edges.emplace_back(i, j);
  return raag::SimplicialGraph(std::move(names), edges);
}

/// Fixed corpus shared by the property tests and the acceptance run.
inline std::vector<raag::SimplicialGraph> corpus(std::size_t count, std::uint64_t seed, int max_n = 8) {
  std::mt19937_64 rng(seed);
  std::vector<raag::SimplicialGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, max_n));
  return out;
}

}  // namespace oracle
