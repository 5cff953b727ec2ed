#include <gtest/gtest.h>

#include <sstream>

#include "gsample/edge_list.hpp"
#include "gsample/generate.hpp"
#include "gsample/trace.hpp"

using namespace gsample;

namespace {

Graph load(const std::string& text, LoadOptions opts = {}) {
  std::istringstream in(text);
  return load_edge_list(in, opts);
}

}  // namespace

TEST(EdgeList, ReadsSimplePathWithComment) {
  const Graph g = load("0 1\n1 2\n# c\n");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degrees(), (std::vector<Degree>{1, 2, 1}));
}

TEST(EdgeList, DefaultPreprocessingCollapsesAndDrops) {
  const Graph g = load("0 1\n1 0\n0 0\n");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EdgeList, RawModeKeepsLoopsAndDuplicates) {
  const Graph g = load("0 1\n1 0\n0 0\n", {false, false, false});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 4u);
}

TEST(EdgeList, CrlfTabsAndSparseLabels) {
  const Graph g = load("# header\r\n100\t7\r\n7 42\r\n");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.label(0), 100);
  EXPECT_EQ(g.label(1), 7);
  EXPECT_EQ(g.label(2), 42);
}

TEST(EdgeList, KeepsOnlyLargestComponent) {
  const Graph g = load("1 2\n2 3\n3 1\n8 9\n");
  EXPECT_EQ(g.node_count(), 3u);
  const Graph all = load("1 2\n2 3\n3 1\n8 9\n", {true, true, false});
  EXPECT_EQ(all.node_count(), 5u);
}

TEST(EdgeList, ParseErrorsCarryLineNumber) {
  try {
    load("0 1\n# ok\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load("0\n"), ParseError);
  EXPECT_THROW(load("0 1 2\n"), ParseError);
  EXPECT_THROW(load("0 1.5\n"), ParseError);
}

TEST(EdgeList, EmptyAfterPreprocessingThrows) {
  EXPECT_THROW(load("# only comments\n"), std::runtime_error);
  EXPECT_THROW(load("3 3\n"), std::runtime_error);
}

TEST(EdgeList, RoundTripOfGeneratedMultigraph) {
  Rng rng(5);
  const std::vector<Degree> seq{2, 3, 1, 4, 2, 2};
  const Graph g = configuration_model(seq, rng);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph back = load(buf.str(), {false, false, false});
  EXPECT_EQ(back.edge_count(), g.edge_count());
  auto a = g.degrees(), b = back.degrees();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(TraceCsv, RoundTrip) {
  SampleTrace t;
  t.technique = "bfs";
  t.seed = 3;
  t.rng_seed = 99;
  t.records = {{3, 2, std::nullopt}, {4, 5, 1.25}};
  t.coverage = 0.2;
  std::stringstream buf;
  write_trace_csv(buf, t);
  const SampleTrace back = read_trace_csv(buf);
  EXPECT_EQ(back.technique, "bfs");
  EXPECT_EQ(back.seed, 3u);
  EXPECT_EQ(back.rng_seed, 99u);
  EXPECT_DOUBLE_EQ(back.coverage, 0.2);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_FALSE(back.records[0].x.has_value());
  EXPECT_EQ(back.records[1].degree, 5u);
  EXPECT_DOUBLE_EQ(*back.records[1].x, 1.25);
}

TEST(TraceCsv, MalformedRowThrows) {
  std::istringstream in("position,node,degree,x_value\n0,1\n");
  EXPECT_THROW(read_trace_csv(in), ParseError);
}
