#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "raag/errors.hpp"
#include "raag/gen.hpp"
#include "raag/order.hpp"
#include "test_util.hpp"

using namespace raag;
using testutil::set_of;

namespace {

std::vector<std::pair<std::string, std::string>> named_pairs(const SimplicialGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : order_pairs(g)) out.emplace_back(g.name(p.lower), g.name(p.upper));
  return out;
}

}  // namespace

TEST(Order, Leq) {
  const auto e2 = empty_graph(2);
  EXPECT_TRUE(leq(e2, 0, 1));
  const auto p = path_graph(3);
  EXPECT_TRUE(leq(p, p.index_of("a"), p.index_of("b")));
  const auto f = named_graph("fig_sl2");
  EXPECT_FALSE(leq(f, f.index_of("m"), f.index_of("t")));
  EXPECT_THROW(leq(p, 1, 1), InputError);
}

TEST(Order, OrderPairs) {
  EXPECT_EQ(order_pairs(complete_graph(3)).size(), 6u);
  const auto f = named_graph("fig_sl2");
  const std::vector<std::pair<std::string, std::string>> tb{{"t", "b"}, {"b", "t"}};
  auto got = named_pairs(f);
  std::sort(got.begin(), got.end());
  auto want = tb;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_TRUE(order_pairs(named_graph("gamma3")).empty());
  EXPECT_TRUE(transvections(named_graph("gamma3")).empty());
}

TEST(Order, EquivalenceClasses) {
  const auto k3 = complete_graph(3);
  const auto c3 = equivalence_classes(k3);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].members.size(), 3u);

  const auto f = named_graph("fig_sl2");
  const auto cf = equivalence_classes(f);
  ASSERT_EQ(cf.size(), 6u);
  std::size_t singletons = 0;
  for (const auto& c : cf) {
    if (c.members.size() == 1)
      ++singletons;
    else
      EXPECT_EQ(c.members, set_of(f, {"t", "b"}));
  }
  EXPECT_EQ(singletons, 5u);

  const auto p = path_graph(3);
  const auto cp = equivalence_classes(p);
  ASSERT_EQ(cp.size(), 2u);
  EXPECT_EQ(cp[0].members, set_of(p, {"a", "c"}));
  EXPECT_EQ(cp[0].representative, p.index_of("a"));
  EXPECT_EQ(cp[1].members, set_of(p, {"b"}));
}

TEST(Order, MaximalVertices) {
  EXPECT_EQ(maximal_vertices(complete_graph(3)).size(), 3u);
  const auto p = path_graph(3);
  EXPECT_EQ(maximal_vertices(p), set_of(p, {"b"}));
  EXPECT_EQ(maximal_vertices(empty_graph(2)).size(), 2u);
}

TEST(Order, LeafLike) {
  const auto s = star_graph(3);
  EXPECT_EQ(leaf_like(s, s.index_of("a")), s.index_of("c"));
  const auto k3 = complete_graph(3);
  for (VertexIndex v = 0; v < 3; ++v) EXPECT_FALSE(leaf_like(k3, v).has_value());
  EXPECT_FALSE(leaf_like(complete_graph(1), 0).has_value());
}

TEST(Order, Transvections) {
  const auto p = path_graph(3);
  // a <= b, c <= b, a ~ c; each ordered pair gives R and L
  EXPECT_EQ(transvections(p).size(), 2 * order_pairs(p).size());
  EXPECT_EQ(related_pair_count(p), 3u);
  EXPECT_EQ(related_pair_count(named_graph("fig_sl2")), 1u);
}

TEST(OrderProperty, AgreesWithOracle) {
  for (const auto& g : oracle::corpus(300, 12)) {
    const auto m = oracle::from_graph(g);
    const int n = m.n;
    std::vector<OrderPair> want;
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (v != w && oracle::leq(m, v, w)) want.push_back({static_cast<VertexIndex>(v), static_cast<VertexIndex>(w)});
    EXPECT_EQ(order_pairs(g), want);

    // transitivity on distinct triples
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (a != b && b != c && a != c && leq(g, a, b) && leq(g, b, c)) EXPECT_TRUE(leq(g, a, c));

    // classes are exactly mutual leq
    const auto classes = equivalence_classes(g);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const bool mutual = oracle::leq(m, a, b) && oracle::leq(m, b, a);
        bool same = false;
        for (const auto& c : classes) same = same || (c.members.contains(a) && c.members.contains(b));
        EXPECT_EQ(same, mutual);
        if (mutual) {
          auto la = oracle::link(m, a), lb = oracle::link(m, b);
          if (m.adj(a, b)) {
            la.erase(b);
            lb.erase(a);
          }
          EXPECT_EQ(la, lb);
        }
      }

    EXPECT_EQ(order_pairs(g).empty(), transvections(g).empty());
  }
}
