#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sepdesign/causal_oracle.hpp"
#include "sepdesign/chordal.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/random.hpp"
#include "sepdesign/randgen.hpp"

namespace sepdesign {
namespace {

const Graph kK2 = Graph::build(2, {{0, 1}});
const Graph kPath = Graph::build(3, {{0, 1}, {1, 2}});
const Graph kTriangle = Graph::build(3, {{0, 1}, {0, 2}, {1, 2}});

std::vector<int> as_signs(const Pdag& pdag) {
  std::vector<int> out;
  for (auto s : pdag.state) {
    out.push_back(s == EdgeState::Forward ? 1 : s == EdgeState::Backward ? -1 : 0);
  }
  return out;
}

TEST(MoralOrientations, Counts) {
  EXPECT_EQ(enumerate_moral_orientations(kK2).size(), 2u);
  const auto path = enumerate_moral_orientations(kPath);
  EXPECT_EQ(path.size(), 3u);
  for (const auto& dag : path) {
    EXPECT_FALSE(dag.forward[0] && !dag.forward[1]) << "0->1<-2 is immoral";
  }
  EXPECT_EQ(enumerate_moral_orientations(kTriangle).size(), 6u);
}

TEST(MoralOrientations, MatchBruteForceOverAllOrientations) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      if (!is_chordal(g)) continue;
      std::vector<std::vector<bool>> ours;
      for (const auto& dag : enumerate_moral_orientations(g)) {
        EXPECT_TRUE(is_acyclic(g, dag));
        EXPECT_FALSE(has_immorality(g, dag));
        ours.push_back(dag.forward);
      }
      auto expected = oracle::moral_orientations(g);
      std::sort(ours.begin(), ours.end());
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(ours, expected);
    }
  }
}

TEST(MoralOrientations, SizeGuard) {
  try {
    enumerate_moral_orientations(Graph::build(9, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(RandomOrientation, DeterministicAndCovering) {
  EXPECT_EQ(random_moral_orientation(kK2, 17), random_moral_orientation(kK2, 17));
  std::set<Dag> seen;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) seen.insert(random_moral_orientation(kPath, seed));
  EXPECT_EQ(seen.size(), 3u);
}

TEST(RandomOrientation, LargeGraphsStayMoral) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = sample_chordal({.n = 30, .d = 4.0, .seed = seed});
    const auto dag = random_moral_orientation(g, seed);
    EXPECT_TRUE(is_acyclic(g, dag));
    EXPECT_FALSE(has_immorality(g, dag));
  }
  EXPECT_THROW(random_moral_orientation(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 1),
               Error);
}

TEST(SimulateIntervention, Examples) {
  const auto chain = orient_by_order(kPath, std::vector<Vertex>{0, 1, 2});
  EXPECT_EQ(simulate_intervention(kPath, chain, std::vector<Vertex>{1}),
            (std::vector<Arc>{{0, 1}, {1, 2}}));
  EXPECT_EQ(simulate_intervention(kPath, chain, std::vector<Vertex>{0, 1}),
            (std::vector<Arc>{{1, 2}}));
  EXPECT_TRUE(simulate_intervention(kPath, chain, std::vector<Vertex>{}).empty());
}

TEST(SimulateIntervention, ReturnsExactlyTheCut) {
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = sample_chordal({.n = 15, .d = 3.0, .seed = seed});
    const auto dag = random_moral_orientation(g, seed);
    std::vector<Vertex> set;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (rng.bernoulli(0.3)) set.push_back(v);
    }
    const auto cut = simulate_intervention(g, dag, set);
    std::size_t expected = 0;
    for (const auto& [u, v] : g.edges()) {
      const bool iu = std::count(set.begin(), set.end(), u) > 0;
      const bool iv = std::count(set.begin(), set.end(), v) > 0;
      expected += iu != iv ? 1 : 0;
    }
    EXPECT_EQ(cut.size(), expected);
    for (const auto& a : cut) {
      EXPECT_NE(std::count(set.begin(), set.end(), a.from) > 0,
                std::count(set.begin(), set.end(), a.to) > 0);
    }
  }
}

TEST(MeekClosure, Examples) {
  auto pdag = meek_closure(kPath, std::vector<Arc>{{0, 1}});
  EXPECT_EQ(as_signs(pdag), (std::vector<int>{1, 1}));

  pdag = meek_closure(kPath, std::vector<Arc>{{1, 2}});
  EXPECT_EQ(as_signs(pdag), (std::vector<int>{0, 1}));

  pdag = meek_closure(kTriangle, std::vector<Arc>{{0, 1}});
  EXPECT_EQ(as_signs(pdag), (std::vector<int>{1, 0, 0}));
}

TEST(MeekClosure, ExamplesAgreeWithExtensionOracle) {
  const std::vector<Arc> e1{{0, 1}};
  EXPECT_EQ(as_signs(meek_closure(kPath, e1)), oracle::extension_intersection(kPath, e1));
  const std::vector<Arc> e2{{1, 2}};
  EXPECT_EQ(as_signs(meek_closure(kPath, e2)), oracle::extension_intersection(kPath, e2));
  EXPECT_EQ(as_signs(meek_closure(kTriangle, e1)), oracle::extension_intersection(kTriangle, e1));
}

TEST(MeekClosure, InconsistentEvidence) {
  for (const auto& evidence : {std::vector<Arc>{{0, 1}, {1, 0}}, std::vector<Arc>{{0, 2}}}) {
    try {
      meek_closure(kPath, evidence);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InconsistentEvidence);
    }
  }
  try {
    meek_closure(kTriangle, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentEvidence);
  }
}

TEST(MeekClosure, RuleOrderMonotoneIdempotent) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = sample_chordal({.n = 2 + seed % 7, .d = 1.0 + seed % 4, .seed = seed});
    const auto dag = random_moral_orientation(g, seed);
    std::vector<Arc> small;
    std::vector<Arc> large;
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < g.size(); ++v) {
        if (rng.bernoulli(0.4)) set.push_back(v);
      }
      for (const auto& a : simulate_intervention(g, dag, set)) {
        if (j == 0) small.push_back(a);
        large.push_back(a);
      }
    }
    std::sort(large.begin(), large.end());
    large.erase(std::unique(large.begin(), large.end()), large.end());

    const auto forward = meek_closure(g, large, RuleOrder::Forward);
    EXPECT_EQ(forward, meek_closure(g, large, RuleOrder::Reverse));
    EXPECT_EQ(meek_closure(g, forward.arcs(g)), forward);

    const auto weaker = meek_closure(g, small);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (weaker.state[e] != EdgeState::Undirected) EXPECT_EQ(weaker.state[e], forward.state[e]);
    }
    // Closing after each intervention lands on the same fixpoint.
    const auto staged = meek_closure(g, [&] {
      auto arcs = weaker.arcs(g);
      arcs.insert(arcs.end(), large.begin(), large.end());
      std::sort(arcs.begin(), arcs.end());
      arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
      return arcs;
    }());
    EXPECT_EQ(staged, forward);
  }
}

TEST(LearnsAll, Examples) {
  EXPECT_TRUE(design_learns_all(kPath, Design::from_interventions(3, {{1}})).learns_all);

  const auto report = design_learns_all(kPath, Design::from_interventions(3, {{0}}));
  EXPECT_FALSE(report.learns_all);
  ASSERT_TRUE(report.unlearned_edge.has_value());
  EXPECT_EQ(*report.unlearned_edge, (Edge{1, 2}));
  ASSERT_TRUE(report.failing_dag.has_value());
  EXPECT_FALSE(report.failing_dag->forward[0]);  // truth 1 -> 0

  EXPECT_FALSE(design_learns_all(kK2, Design::from_interventions(2, {})).learns_all);
}

TEST(LearnsAll, CliqueFirstOrderHidesCliqueEdges) {
  // K3 plus a pendant: with the triangle first in the causal order, knowing
  // the pendant edge says nothing about the triangle.
  const auto g = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto dag = orient_by_order(g, std::vector<Vertex>{0, 1, 2, 3});
  const auto pdag = meek_closure(g, simulate_intervention(g, dag, std::vector<Vertex>{3}));
  EXPECT_EQ(pdag.num_oriented(), 1u);
}

}  // namespace
}  // namespace sepdesign
