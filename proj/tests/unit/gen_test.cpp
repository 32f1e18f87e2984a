#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "raag/errors.hpp"
#include "raag/gen.hpp"
#include "raag/io.hpp"
#include "raag/order.hpp"
#include "raag/pconj.hpp"
#include "raag/sil.hpp"

using namespace raag;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const SimplicialGraph& g,
                                                          const std::map<std::string, std::string>& rename = {}) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    std::string a = g.name(u), b = g.name(v);
    if (!rename.empty()) {
      a = rename.at(a);
      b = rename.at(b);
    }
    out.insert(std::minmax(a, b));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Gen, Lambda) {
  const auto l2 = lambda_graph(2);
  EXPECT_EQ(l2.order(), 6u);
  EXPECT_EQ(l2.edge_count(), 9u);
  const auto l3 = lambda_graph(3);
  EXPECT_EQ(l3.order(), 11u);
  EXPECT_EQ(l3.edge_count(), 21u);
  // blacks see both greens, reds the top one, blues the bottom one
  for (int k = 1; k <= 3; ++k) {
    const std::string s = std::to_string(k);
    EXPECT_TRUE(l3.adjacent(l3.index_of("b" + s), l3.index_of("gt")));
    EXPECT_TRUE(l3.adjacent(l3.index_of("b" + s), l3.index_of("gb")));
    EXPECT_TRUE(l3.adjacent(l3.index_of("r" + s), l3.index_of("gt")));
    EXPECT_FALSE(l3.adjacent(l3.index_of("r" + s), l3.index_of("gb")));
    EXPECT_TRUE(l3.adjacent(l3.index_of("u" + s), l3.index_of("gb")));
    EXPECT_EQ(link(l3, l3.index_of("r" + s)).size(), 3u);
  }
  EXPECT_THROW(lambda_graph(1), InputError);
}

TEST(Gen, GammaPqr) {
  EXPECT_EQ(gamma_pqr(2, 4, 3).order(), 27u);
  EXPECT_EQ(gamma_pqr(3, 3, 3).order(), 29u);
  EXPECT_THROW(gamma_pqr(2, 1, 2), InputError);
  EXPECT_EQ(named_graph("gamma_243"), gamma_pqr(2, 4, 3));
}

TEST(Gen, Gamma222IsGamma3) {
  std::map<std::string, std::string> rename{{"gt", "h2"}, {"gb", "h1"}};
  for (int i = 1; i <= 3; ++i) {
    const std::string k = "k" + std::to_string(i) + "_", s = std::to_string(i);
    rename[k + "b1"] = "w" + s;
    rename[k + "r1"] = "v" + s;
    rename[k + "u1"] = "v" + s + "p";
    rename[k + "b2"] = "w" + s + "p";
  }
  const auto g = gamma_pqr(2, 2, 2);
  const auto g3 = named_graph("gamma3");
  EXPECT_EQ(g.order(), g3.order());
  EXPECT_EQ(named_edges(g, rename), named_edges(g3));
}

TEST(Gen, GammaPqrStructure) {
  for (auto [p, q, r] : {std::tuple{2, 2, 2}, std::tuple{2, 4, 3}, std::tuple{3, 3, 3}}) {
    const auto g = gamma_pqr(p, q, r);
    EXPECT_TRUE(order_pairs(g).empty());
    const auto d = maximal_sil_system(g);
    ASSERT_TRUE(d.has_value());
    std::map<std::string, std::map<VertexIndex, int>> per_block;
    for (const auto& pc : subordinate_pcs(g, *d)) ++per_block[g.name(pc.vertex).substr(0, 3)][pc.vertex];
    const int sizes[3] = {p, q, r};
    for (int i = 0; i < 3; ++i) {
      const auto& block = per_block["k" + std::to_string(i + 1) + "_"];
      EXPECT_EQ(static_cast<int>(block.size()), sizes[i]);
      for (const auto& [v, count] : block) {
        EXPECT_EQ(count, 1);
        EXPECT_EQ(g.name(v).substr(3, 1), "b");
      }
    }
  }
}

TEST(Gen, Gnp) {
  const auto empty = gnp({6, 0.0, 1});
  EXPECT_EQ(empty.edge_count(), 0u);
  const auto full = gnp({6, 1.0, 1});
  EXPECT_EQ(full.edge_count(), 15u);
  EXPECT_EQ(gnp({30, 0.4, 99}), gnp({30, 0.4, 99}));
  EXPECT_NE(gnp({30, 0.4, 99}), gnp({30, 0.4, 100}));
  EXPECT_EQ(gnp({3, 0.5, 0}).name(2), "v2");
  EXPECT_THROW(gnp({0, 0.5, 0}), InputError);
  EXPECT_THROW(gnp({3, 1.5, 0}), InputError);
}

TEST(Gen, GnpGolden) {
  const auto golden = parse_graph(read_file(std::string(RAAG_FIXTURE_DIR) + "/gnp_10_0.5_42.json"));
  EXPECT_EQ(gnp({10, 0.5, 42}), golden);
}

TEST(Gen, HashIsSplitMix) {
  // splitmix64 first output for state 0
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_GE(unit_interval(~0ULL), 0.0);
  EXPECT_LT(unit_interval(~0ULL), 1.0);
}

TEST(Gen, Named) {
  const auto g1 = named_graph("gamma1");
  EXPECT_EQ(g1.order(), 7u);
  const std::set<std::pair<std::string, std::string>> want{
      {"l1", "v1"}, {"l2", "v1"}, {"l1", "v2"}, {"l2", "v2"}, {"l1", "v3"},
      {"l2", "v3"}, {"d1", "l1"}, {"d2", "l2"}, {"d1", "d2"}};
  EXPECT_EQ(named_edges(g1), want);
  const auto f = named_graph("fig_sl2");
  EXPECT_EQ(f.order(), 7u);
  EXPECT_EQ(f.edge_count(), 15u);
  EXPECT_THROW(named_graph("nope"), InputError);
  for (const auto& n : named_graph_names()) EXPECT_NO_THROW(named_graph(n));
}

TEST(Gen, FixtureFilesMatch) {
  for (const auto& n : named_graph_names()) {
    const auto text = read_file(std::string(RAAG_FIXTURE_DIR) + "/" + n + ".json");
    ASSERT_FALSE(text.empty()) << n;
    EXPECT_EQ(parse_graph(text), named_graph(n)) << n;
  }
}
