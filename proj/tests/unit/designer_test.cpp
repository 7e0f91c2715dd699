#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "sepdesign/chordal.hpp"
#include "sepdesign/designer.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/randgen.hpp"

namespace sepdesign {
namespace {

Graph complete(std::size_t n, std::vector<double> w) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges, std::move(w));
}

const Graph kPath = Graph::build(3, {{0, 1}, {1, 2}}, std::vector<double>{1, 3, 1});
const Graph kTriangle = complete(3, {3, 2, 1});
const Graph kIntervalPath =
    Graph::from_intervals({{0, 1}, {0.5, 2}, {1.5, 3}}, std::vector<double>{1, 3, 1});
const Graph kIntervalTriangle =
    Graph::from_intervals({{0, 10}, {1, 9}, {2, 8}}, std::vector<double>{3, 2, 1});

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidInput;
}

std::vector<std::string> row_strings(const Design& d) {
  std::vector<std::string> out;
  for (const auto& r : d.rows()) out.push_back(r.to_string());
  return out;
}

TEST(MinSeparatingSize, Examples) {
  EXPECT_EQ(min_separating_size(kTriangle), 2u);
  EXPECT_EQ(min_separating_size(Graph::build(2, {{0, 1}})), 1u);
  EXPECT_EQ(min_separating_size(kPath), 1u);
  EXPECT_EQ(min_separating_size(Graph::build(4, {})), 0u);
  EXPECT_EQ(kind_of([] { min_separating_size(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})); }),
            ErrorKind::NotChordal);
}

TEST(Unbounded, Examples) {
  auto result = design_unbounded_optimal(kTriangle);
  EXPECT_EQ(result.design.nonempty_interventions(), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(result.total_cost, 3.0);

  result = design_unbounded_optimal(kPath);
  EXPECT_EQ(result.design.nonempty_interventions(), (std::vector<VertexSet>{{0, 2}}));
  EXPECT_EQ(result.total_cost, 2.0);

  result = design_unbounded_optimal(Graph::build(1, {}));
  EXPECT_EQ(result.design.m(), 0u);
  EXPECT_EQ(result.total_cost, 0.0);
}

TEST(Unbounded, CostIsTotalMinusFrankSet) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = sample_chordal({.n = 1 + seed % 25, .d = 1.0 + seed % 5, .seed = seed});
    const auto peo = maximum_cardinality_search(g);
    const auto result = design_unbounded_optimal(g);
    const auto frank = max_weight_independent_set_frank(g, peo);
    EXPECT_EQ(result.total_cost, g.total_weight() - g.total_weight(frank));
    EXPECT_LE(result.design.m(), chromatic_number_chordal(g, peo));
    EXPECT_TRUE(verify_graph_separating(g, result.design).separating);
  }
}

TEST(Unbounded, NoColoringIsCheaper) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 8;
    auto g = sample_chordal({.n = n, .d = 1.0 + seed % 4, .seed = seed});
    g = g.with_weights(oracle::random_dyadic_weights(n, 6, seed));
    EXPECT_EQ(design_unbounded_optimal(g).total_cost, oracle::min_unbounded_cost(g, g.weights()));
  }
}

TEST(GreedyChordal, Examples) {
  auto result = design_greedy_chordal(kPath, 1);
  EXPECT_EQ(row_strings(result.design), (std::vector<std::string>{"1", "0", "1"}));
  EXPECT_EQ(result.total_cost, 2.0);

  result = design_greedy_chordal(kTriangle, 2);
  EXPECT_EQ(row_strings(result.design), (std::vector<std::string>{"00", "01", "10"}));
  EXPECT_EQ(result.total_cost, 3.0);

  EXPECT_EQ(kind_of([] { design_greedy_chordal(kTriangle, 1); }),
            ErrorKind::InsufficientInterventions);
}

TEST(GreedyChordal, LogsIndependentSetSteps) {
  // Star with a heavy center: r = min(4, 5) = 4 > chi = 2, so two greedy
  // steps run before the final coloring.
  const auto star = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}},
                                 std::vector<double>{10, 1, 1, 1, 1});
  const auto result = design_greedy_chordal(star, 2);
  ASSERT_GE(result.diagnostics.size(), 2u);
  EXPECT_EQ(result.diagnostics[0].chosen, (VertexSet{0}));
  EXPECT_EQ(result.diagnostics[0].labels[0].to_string(), "00");
  EXPECT_EQ(result.total_cost, 4.0);
}

TEST(GreedyInterval, Examples) {
  auto result = design_greedy_interval(kIntervalPath, 2);
  EXPECT_EQ(row_strings(result.design), (std::vector<std::string>{"01", "00", "01"}));
  EXPECT_EQ(result.total_cost, 2.0);

  result = design_greedy_interval(kIntervalTriangle, 2);
  EXPECT_EQ(result.total_cost, 3.0);
  EXPECT_EQ(result.design.row(0).to_string(), "00");

  const auto edgeless = Graph::from_intervals({{0, 1}, {2, 3}, {4, 5}});
  result = design_greedy_interval(edgeless, 1);
  EXPECT_EQ(row_strings(result.design), (std::vector<std::string>{"0", "0", "0"}));
  EXPECT_EQ(result.total_cost, 0.0);

  EXPECT_EQ(kind_of([] { design_greedy_interval(kPath, 2); }), ErrorKind::NoIntervals);
  EXPECT_EQ(kind_of([] { design_greedy_interval(kIntervalTriangle, 1); }),
            ErrorKind::InsufficientInterventions);
}

TEST(Exact, Examples) {
  EXPECT_EQ(design_exact(kPath, 1).total_cost, 2.0);
  EXPECT_EQ(design_exact(kTriangle, 2).total_cost, 3.0);

  const auto star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}}, std::vector<double>{10, 1, 1, 1});
  const auto result = design_exact(star, 1);
  EXPECT_EQ(row_strings(result.design), (std::vector<std::string>{"0", "1", "1", "1"}));
  EXPECT_EQ(result.total_cost, 3.0);
  EXPECT_TRUE(result.optimal);
}

TEST(Exact, BudgetExhaustionReturnsIncumbent) {
  const auto g = sample_chordal({.n = 12, .d = 3.0, .seed = 4});
  const std::size_t m = min_separating_size(g) + 1;
  const auto result = design_exact(g, m, ExactLimits{.max_nodes = 5});
  EXPECT_FALSE(result.optimal);
  EXPECT_TRUE(verify_graph_separating(g, result.design).separating);
  EXPECT_LE(result.total_cost, design_greedy_chordal(g, m).total_cost);
}

TEST(Exact, MatchesExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + seed % 8;
    auto g = sample_chordal({.n = n, .d = 1.0 + seed % 4, .seed = seed});
    g = g.with_weights(oracle::random_dyadic_weights(n, 6, seed));
    const auto chi = oracle::chromatic_number(g);
    const auto lo = min_separating_size(g);
    for (std::size_t m = lo; m <= std::max(lo, chi); ++m) {
      const auto exact = design_exact(g, m);
      ASSERT_TRUE(exact.optimal);
      EXPECT_EQ(exact.total_cost, oracle::min_design_cost(g, g.weights(), m))
          << "seed " << seed << " m " << m;
    }
  }
}

TEST(Exact, OrderingAgainstGreedyAndUnbounded) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 10;
    auto g = sample_chordal({.n = n, .d = 1.0 + seed % 4, .seed = seed});
    g = g.with_weights(oracle::random_dyadic_weights(n, 6, seed + 7));
    const auto peo = maximum_cardinality_search(g);
    const auto chi = chromatic_number_chordal(g, peo);
    const auto unbounded = design_unbounded_optimal(g).total_cost;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t m = min_separating_size(g); m <= chi + 1; ++m) {
      const auto exact = design_exact(g, m);
      const auto greedy = design_greedy_chordal(g, m);
      EXPECT_LE(exact.total_cost, greedy.total_cost);
      EXPECT_LE(exact.total_cost, previous);
      EXPECT_GE(exact.total_cost, unbounded);
      if (m >= chi) EXPECT_EQ(exact.total_cost, unbounded) << "seed " << seed;
      previous = exact.total_cost;
    }
  }
}

TEST(DesignResults, AlwaysSeparating) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = sample_chordal({.n = 1 + seed % 40, .d = 1.0 + seed % 6, .seed = seed});
    const auto lo = min_separating_size(g);
    for (std::size_t m : {lo, lo + 1, lo + 3}) {
      const auto greedy = design_greedy_chordal(g, m);
      ASSERT_TRUE(verify_graph_separating(g, greedy.design).separating);
      EXPECT_EQ(greedy.total_cost, design_cost(greedy.design, g.weights()));
      EXPECT_EQ(greedy.design.m(), m);
    }
    ASSERT_TRUE(verify_graph_separating(g, design_unbounded_optimal(g).design).separating);
  }
}

TEST(DesignResults, IntervalGreedySeparating) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = oracle::random_interval_graph(1 + seed % 20, 30, seed);
    g = g.with_weights(oracle::random_dyadic_weights(g.size(), 4, seed));
    const auto lo = min_separating_size(g);
    for (std::size_t m = lo; m <= lo + 3; ++m) {
      const auto result = design_greedy_interval(g, m);
      ASSERT_TRUE(verify_graph_separating(g, result.design).separating);
      EXPECT_GE(result.total_cost, design_unbounded_optimal(g).total_cost);
    }
  }
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

TEST(ExportIlp, PathCounts) {
  const auto lp = export_ilp(kPath, kPath.weights(), 1);
  const auto binary = lp.substr(lp.find("Binary\n"));
  EXPECT_EQ(count_matches(binary, R"(x_\d+_\d+)"), 6u);
  EXPECT_EQ(count_matches(lp, R"(assign_\d+:)"), 3u);
  EXPECT_EQ(count_matches(lp, R"(conflict_\d+_\d+_\d+:)"), 4u);
  EXPECT_NE(lp.find("Minimize\n"), std::string::npos);
  EXPECT_NE(lp.find("Subject To\n"), std::string::npos);
  EXPECT_EQ(lp.substr(lp.size() - 4), "End\n");
}

TEST(ExportIlp, TriangleCountsAndCoefficients) {
  // t = min(2^2, 3) = 3 labels with b = [0, 1, 1].
  const auto model = build_ilp_model(kTriangle, kTriangle.weights(), 2);
  EXPECT_EQ(model.num_labels, 3u);
  EXPECT_EQ(model.num_variables(), 9u);
  EXPECT_EQ(model.num_assignment_rows(), 3u);
  EXPECT_EQ(model.num_conflict_rows(), 9u);
  const std::vector<double> b{0, 1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(model.objective_coefficient(i, k), kTriangle.weight(i) * b[k]);
    }
  }
  const auto lp = write_lp(model);
  EXPECT_NE(lp.find("3 x_0_1"), std::string::npos);
  EXPECT_NE(lp.find("0 x_2_0"), std::string::npos);
  EXPECT_NE(lp.find("conflict_0_1_2: x_0_2 + x_1_2 <= 1"), std::string::npos);
}

TEST(ExportIlp, FullLabelSetWhenNIsLarge) {
  const auto g = complete(5, {1, 1, 1, 1, 1});
  const auto model = build_ilp_model(g, g.weights(), 2);
  EXPECT_EQ(model.num_variables(), 5u * 4u);
  EXPECT_EQ(model.b, (std::vector<std::size_t>{0, 1, 1, 2}));
}

TEST(ExportIlp, RejectsZeroInterventions) {
  EXPECT_EQ(kind_of([] { export_ilp(kPath, kPath.weights(), 0); }), ErrorKind::InvalidInput);
}

}  // namespace
}  // namespace sepdesign
