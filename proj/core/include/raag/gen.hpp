#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// The 3m-gon with two green vertices gt, gb (m >= 3), or the six-vertex
/// m = 2 graph. Names: r{k}, u{k}, b{k}, gt, gb. r's see gt, u's see gb,
/// b's see both.
SimplicialGraph lambda_graph(int m);

/// Lambda_p, Lambda_q, Lambda_r glued along gt and gb. Block vertices carry
/// the prefix "k1_", "k2_", "k3_".
SimplicialGraph gamma_pqr(int p, int q, int r);

struct GnpConfig {
  std::size_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// splitmix64 finalizer; the building block of every seeded hash here.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);
/// Uniform double in [0, 1) from the top 53 bits.
double unit_interval(std::uint64_t h);

/// Erdos-Renyi graph on v0..v{n-1}; pair (i, j) is an edge iff
/// unit_interval(hash(seed, i, j)) < p.
SimplicialGraph gnp(const GnpConfig& c);

SimplicialGraph complete_graph(std::size_t n);
SimplicialGraph empty_graph(std::size_t n);
SimplicialGraph path_graph(std::size_t n);
/// Center c with leaves a, b, d, ... (K_{1,k}).
SimplicialGraph star_graph(std::size_t leaves);

/// Figure fixtures and small sanity graphs by name; see named_graph_names().
SimplicialGraph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

}  // namespace raag
