#include <gtest/gtest.h>

#include "oracle.hpp"
#include "raag/errors.hpp"
#include "raag/gen.hpp"
#include "raag/io.hpp"

using namespace raag;

namespace {

SimplicialGraph path3() { return SimplicialGraph::from_named_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

// Line and column of the ParseError thrown by parsing text.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {0, 0};
}

}  // namespace

TEST(Io, ParsePathJson) {
  EXPECT_EQ(parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})", GraphFormat::kJson), path3());
}

TEST(Io, ParsePathDot) {
  EXPECT_EQ(parse_graph("graph g { a -- b; b -- c; }", GraphFormat::kDot), path3());
  EXPECT_EQ(parse_graph("strict graph { a -- b -- c }"), path3());
  EXPECT_EQ(parse_graph("// comment\ngraph { node [shape=point]; a; b [label=\"x\"]; c; a -- b; c -- b }"), path3());
}

TEST(Io, DetectFormat) {
  EXPECT_EQ(detect_format("  \n{\"vertices\":[]}"), GraphFormat::kJson);
  EXPECT_EQ(detect_format("graph { }"), GraphFormat::kDot);
}

TEST(Io, JsonErrorsCarryPosition) {
  EXPECT_EQ(error_at("{\"vertices\":[\"a\",\"b\"],\n \"edges\":[[\"a\",\"a\"]]}").first, 2u);
  EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[["a","z"]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","a"],"edges":[]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[],"extra":1})"), ParseError);
  const auto [line, col] = error_at("{\"vertices\":[\"a\",\n  \"b\" \"c\"]}");
  EXPECT_EQ(line, 2u);
  EXPECT_GT(col, 0u);
}

TEST(Io, DotErrors) {
  EXPECT_THROW(parse_graph("digraph { a -> b }"), ParseError);
  EXPECT_THROW(parse_graph("graph { a -- a }"), ParseError);
  EXPECT_THROW(parse_graph("graph { a -- b; b -- a }"), ParseError);
  EXPECT_THROW(parse_graph("graph { subgraph s { a } }"), ParseError);
  EXPECT_THROW(parse_graph("graph { a -- b "), ParseError);
  EXPECT_EQ(error_at("graph {\n  a -- b;\n  b -- b;\n}").first, 3u);
}

TEST(Io, RoundTrip) {
  std::vector<SimplicialGraph> graphs = oracle::corpus(50, 61);
  for (const char* name : {"gamma3", "two_additional", "fig_sl2", "k1"}) graphs.push_back(named_graph(name));
  graphs.push_back(empty_graph(0));
  for (const auto& g : graphs) {
    EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::kJson), GraphFormat::kJson), g);
    EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::kDot), GraphFormat::kDot), g);
  }
}

TEST(Io, SerializeIsStable) {
  const auto g = named_graph("gamma3");
  EXPECT_EQ(serialize_graph(g, GraphFormat::kJson), serialize_graph(parse_graph(serialize_graph(g, GraphFormat::kJson)),
                                                                    GraphFormat::kJson));
  EXPECT_EQ(analysis_report(g).dump(), analysis_report(g).dump());
}

TEST(Io, AnalysisReport) {
  const auto r = analysis_report(path3());
  EXPECT_EQ(r["connected"], true);
  EXPECT_EQ(r["sil_pairs"], nlohmann::json::array());
  EXPECT_TRUE(r["system"].is_null());
  EXPECT_EQ(r["equivalence_classes"], nlohmann::json::parse(R"([["a","c"],["b"]])"));

  const auto t = analysis_report(named_graph("two_additional"));
  EXPECT_EQ(t["separated_sil_pairs"], nlohmann::json::parse(R"([["c1","c2"]])"));
  ASSERT_FALSE(t["system"].is_null());
  for (const auto& row : t["partial_conjugations"]) EXPECT_TRUE(row["type"].is_string());
}
