#include "raag/gen.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "raag/errors.hpp"

namespace raag {

namespace {

using NamedEdges = std::vector<std::pair<std::string, std::string>>;

struct Builder {
  std::vector<std::string> names;
  NamedEdges edges;

  void vertex(std::string n) { names.push_back(std::move(n)); }
  void edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }
  SimplicialGraph build() { return SimplicialGraph::from_named_edges(std::move(names), edges); }
};

void add_lambda(Builder& b, int m, const std::string& prefix) {
  auto n = [&](const char* kind, int k) { return prefix + kind + std::to_string(k); };
  if (m == 2) {
    // path b1 - r1 - u1 - b2
    for (const auto& v : {n("b", 1), n("r", 1), n("u", 1), n("b", 2)}) b.vertex(v);
    b.edge(n("b", 1), n("r", 1));
    b.edge(n("r", 1), n("u", 1));
    b.edge(n("u", 1), n("b", 2));
    b.edge(n("r", 1), "gt");
    b.edge(n("u", 1), "gb");
  } else {
    for (int k = 1; k <= m; ++k) {
      b.vertex(n("r", k));
      b.vertex(n("u", k));
      b.vertex(n("b", k));
    }
    for (int k = 1; k <= m; ++k) {
      b.edge(n("r", k), n("u", k));
      b.edge(n("u", k), n("b", k));
      b.edge(n("b", k), n("r", k % m + 1));
      b.edge(n("r", k), "gt");
      b.edge(n("u", k), "gb");
    }
  }
  for (int k = 1; k <= m; ++k) {
    b.edge(n("b", k), "gt");
    b.edge(n("b", k), "gb");
  }
}

}  // namespace

SimplicialGraph lambda_graph(int m) {
  if (m < 2) throw InputError("Lambda_m needs m >= 2");
  Builder b;
  add_lambda(b, m, "");
  b.vertex("gt");
  b.vertex("gb");
  return b.build();
}

SimplicialGraph gamma_pqr(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw InputError("Gamma(p,q,r) needs p, q, r >= 2");
  Builder b;
  const int ms[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) add_lambda(b, ms[i], "k" + std::to_string(i + 1) + "_");
  b.vertex("gt");
  b.vertex("gb");
  return b.build();
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }

double unit_interval(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

SimplicialGraph gnp(const GnpConfig& c) {
  if (c.n < 1 || c.n > kMaxVertices) throw InputError("gnp needs 1 <= n <= " + std::to_string(kMaxVertices));
  if (!(c.p >= 0.0 && c.p <= 1.0)) throw InputError("gnp needs 0 <= p <= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t j = i + 1; j < c.n; ++j)
      if (unit_interval(hash_combine(hash_combine(c.seed, i), j)) < c.p) edges.emplace_back(i, j);
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph complete_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (std::size_t j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph empty_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return SimplicialGraph(std::move(names), {});
}

SimplicialGraph path_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph star_graph(std::size_t leaves) {
  std::vector<std::string> names{"c"};
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  const std::string letters = "abdefghijklmnopqrstuvwxyz";
  if (leaves > letters.size()) throw InputError("too many leaves");
  for (std::size_t i = 0; i < leaves; ++i) {
    names.push_back(std::string(1, letters[i]));
    edges.emplace_back(0, i + 1);
  }
  return SimplicialGraph(std::move(names), edges);
}

namespace {

// Figure 2 drawing: t(0,2), b(0,0), m(0,5/4), L1(-2/3,1), R1(2/3,1),
// L2(-1/3,0.65), R2(1/3,0.65). Every drawn segment is an edge.
SimplicialGraph fig_sl2() {
  return SimplicialGraph::from_named_edges(
      {"t", "b", "m", "L1", "R1", "L2", "R2"},
      {{"L2", "t"}, {"R2", "t"}, {"R2", "L2"}, {"R2", "R1"}, {"R1", "t"}, {"L2", "L1"}, {"L1", "t"}, {"m", "t"},
       {"m", "R1"}, {"m", "L1"}, {"m", "b"}, {"R1", "b"}, {"L1", "b"}, {"R2", "b"}, {"L2", "b"}});
}

// v1, v2, v3 share the link {l1, l2}; d1 - d2 hangs between l1 and l2.
SimplicialGraph gamma1() {
  Builder b;
  for (const char* v : {"v1", "v2", "v3", "l1", "l2", "d1", "d2"}) b.vertex(v);
  for (const char* v : {"v1", "v2", "v3"}) {
    b.edge(v, "l1");
    b.edge(v, "l2");
  }
  b.edge("d1", "l1");
  b.edge("d2", "l2");
  b.edge("d1", "d2");
  return b.build();
}

// Three vertical segments w_i .. w_i' between hubs h1 (left) and h2 (right);
// the two dots on each segment subdivide it: w_i - v_i - v_i' - w_i'.
// With crossing edges v_i - h2 and v_i' - h1 this is Gamma_3.
SimplicialGraph gamma23(bool crossing) {
  Builder b;
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    for (const std::string& v : {"w" + s, "v" + s, "v" + s + "p", "w" + s + "p"}) b.vertex(v);
    b.edge("w" + s, "v" + s);
    b.edge("v" + s, "v" + s + "p");
    b.edge("v" + s + "p", "w" + s + "p");
    for (const char* h : {"h1", "h2"}) {
      b.edge("w" + s, h);
      b.edge("w" + s + "p", h);
    }
    if (crossing) {
      b.edge("v" + s, "h2");
      b.edge("v" + s + "p", "h1");
    }
  }
  b.vertex("h1");
  b.vertex("h2");
  return b.build();
}

// c1 (0,0.8), c2 (0,-0.8) between hubs h1 (-1.5,0), h2 (1.5,0); two bridges
// b1 - b2 and a1 - a2 above, each end tied to the hub on its side.
SimplicialGraph two_additional() {
  Builder b;
  for (const char* v : {"c1", "c2", "h1", "h2", "b1", "b2", "a1", "a2"}) b.vertex(v);
  for (const char* c : {"c1", "c2"}) {
    b.edge(c, "h1");
    b.edge(c, "h2");
  }
  b.edge("b1", "h1");
  b.edge("b2", "h2");
  b.edge("b1", "b2");
  b.edge("a1", "a2");
  b.edge("a1", "h1");
  b.edge("a2", "h2");
  return b.build();
}

// Figure 3 left: K_{2,3} with spokes w1, w2, w3 and hubs h1, h2.
SimplicialGraph decomp_left() {
  Builder b;
  for (const char* v : {"w1", "w2", "w3", "h1", "h2"}) b.vertex(v);
  for (const char* w : {"w1", "w2", "w3"}) {
    b.edge(w, "h1");
    b.edge(w, "h2");
  }
  return b.build();
}

// Figure 3 right: w1 (0,1), w2 (0,-1), hubs h1 (-1.5,0), h2 (1.5,0), and the
// bridge d1 (-1,2) - d2 (1,2) tied to the hubs.
SimplicialGraph decomp_right() {
  Builder b;
  for (const char* v : {"w1", "w2", "h1", "h2", "d1", "d2"}) b.vertex(v);
  for (const char* w : {"w1", "w2"}) {
    b.edge(w, "h1");
    b.edge(w, "h2");
  }
  b.edge("d1", "h1");
  b.edge("d2", "h2");
  b.edge("d1", "d2");
  return b.build();
}

}  // namespace

std::vector<std::string> named_graph_names() {
  return {"fig_sl2", "gamma1",  "gamma2", "gamma3",   "two_additional", "decomp_left",    "decomp_right",
          "gamma_243", "k1", "k2", "k3", "path3", "star_k13", "two_isolated", "three_isolated"};
}

SimplicialGraph named_graph(const std::string& name) {
  if (name == "fig_sl2") return fig_sl2();
  if (name == "gamma1") return gamma1();
  if (name == "gamma2") return gamma23(false);
  if (name == "gamma3") return gamma23(true);
  if (name == "two_additional") return two_additional();
  if (name == "decomp_left") return decomp_left();
  if (name == "decomp_right") return decomp_right();
  if (name == "gamma_243") return gamma_pqr(2, 4, 3);
  if (name == "k1") return complete_graph(1);
  if (name == "k2") return complete_graph(2);
  if (name == "k3") return complete_graph(3);
  if (name == "path3") return path_graph(3);
  if (name == "star_k13") return star_graph(3);
  if (name == "two_isolated") return empty_graph(2);
  if (name == "three_isolated") return empty_graph(3);
  throw InputError("unknown named graph: " + name);
}

}  // namespace raag
