#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/graph.hpp"
#include "sepdesign/randgen.hpp"
#include "sepdesign/random.hpp"

#include <algorithm>
#include <functional>

namespace sepdesign {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidInput;
}

TEST(GraphTest, MinimalEdge) {
  const auto g = Graph::build(2, {{0, 1}}, std::vector<double>{1, 1});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(GraphTest, CanonicalizesEdgeOrder) {
  const auto g = Graph::build(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.weights()[2], 1.0);
}

TEST(GraphTest, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { Graph::build(3, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { Graph::build(3, {{1, 1}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { Graph::build(3, {{0, 3}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { Graph::build(2, {}, std::vector<double>{1}); }),
            ErrorKind::WeightLengthMismatch);
  EXPECT_EQ(kind_of([] { Graph::build(2, {}, std::vector<double>{1, -0.5}); }),
            ErrorKind::NegativeWeight);
}

TEST(GraphTest, IntervalsMustMatchEdges) {
  const std::vector<Interval> path{{0, 1}, {0.5, 2}, {1.5, 3}};
  const auto g = Graph::build(3, {{0, 1}, {1, 2}}, std::nullopt, path);
  EXPECT_TRUE(g.has_intervals());
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(kind_of([&] { Graph::build(3, {{0, 1}}, std::nullopt, path); }),
            ErrorKind::IntervalMismatch);
  EXPECT_EQ(Graph::from_intervals(path).edges(), g.edges());
}

TEST(GraphTest, TouchingIntervalsOverlap) {
  const auto g = Graph::from_intervals({{0, 1}, {1, 2}});
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(GraphTest, InducedSubgraphExamples) {
  const auto triangle = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}});
  const std::vector<Vertex> pair{0, 1};
  EXPECT_EQ(induced_subgraph(triangle, pair).graph.num_edges(), 1u);

  const auto path = Graph::build(3, {{0, 1}, {1, 2}}, std::vector<double>{1, 2, 3});
  const std::vector<Vertex> ends{2, 0};
  const auto sub = induced_subgraph(path, ends);
  EXPECT_EQ(sub.graph.num_edges(), 0u);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(sub.graph.weight(1), 3.0);

  const std::vector<Vertex> bad{5};
  EXPECT_EQ(kind_of([&] { induced_subgraph(path, bad); }), ErrorKind::VertexOutOfRange);
}

TEST(GraphTest, InducedSubgraphKeepsIntervals) {
  const auto g = Graph::from_intervals({{0, 1}, {0.5, 2}, {1.5, 3}});
  const std::vector<Vertex> keep{1, 2};
  const auto sub = induced_subgraph(g, keep);
  ASSERT_TRUE(sub.graph.has_intervals());
  EXPECT_EQ(sub.graph.intervals()[0], (Interval{0.5, 2}));
}

TEST(GraphProperty, InducedSubgraphCountsEdges) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg{.n = 12, .d = 3.0, .seed = seed};
    const auto g = sample_chordal(cfg);
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.size(); ++v) all.push_back(v);
    EXPECT_EQ(induced_subgraph(g, all).graph, g);

    Rng rng(seed);
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (rng.bernoulli(0.5)) subset.push_back(v);
    }
    std::size_t inside = 0;
    for (const auto& [u, v] : g.edges()) {
      const bool has_u = std::find(subset.begin(), subset.end(), u) != subset.end();
      const bool has_v = std::find(subset.begin(), subset.end(), v) != subset.end();
      inside += has_u && has_v ? 1 : 0;
    }
    EXPECT_EQ(induced_subgraph(g, subset).graph.num_edges(), inside);
  }
}

TEST(GraphProperty, BuildIsDeterministic) {
  const std::vector<Edge> edges{{3, 1}, {0, 2}, {1, 0}};
  EXPECT_EQ(Graph::build(4, edges), Graph::build(4, edges));
}

}  // namespace
}  // namespace sepdesign
