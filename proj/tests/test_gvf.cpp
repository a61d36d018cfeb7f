#include <gtest/gtest.h>

#include <cmath>

#include "gradvar/gvf.hpp"
#include "oracles.hpp"

namespace gradvar {
namespace {

struct Star {
  GraphDomain graph;
  Vertex center = 0;
};

// Center 0, leaves 1..4.
Star star() {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  return {GraphDomain::from_edges(5, edges), 0};
}

GraphDomain path3() {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}};
  return GraphDomain::from_edges(3, edges);
}

BoundaryData leaves(double first, double rest) {
  return BoundaryData({{1, first}, {2, rest}, {3, rest}, {4, rest}});
}

TEST(CheckGvf, StarWithGvfCenterHasNoViolations) {
  const auto s = star();
  const auto report = check_gvf(s.graph, ScalarField{{2, 1, 3, 3, 3}, 1.0});
  EXPECT_TRUE(report.gradually_varied());
  EXPECT_EQ(report.max_adjacent_difference, 1.0);
}

TEST(CheckGvf, StarWithHarmonicCenterViolatesOnce) {
  const auto s = star();
  const auto report = check_gvf(s.graph, ScalarField{{2.5, 1, 3, 3, 3}, 1.0});
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].u, 0u);
  EXPECT_EQ(report.violations[0].v, 1u);
  EXPECT_EQ(report.violations[0].difference, 1.5);
  EXPECT_EQ(report.max_adjacent_difference, 1.5);
}

TEST(CheckGvf, ConstantAndEdgelessFields) {
  EXPECT_TRUE(check_gvf(path3(), ScalarField{{7, 7, 7}, 1.0}).gradually_varied());
  const auto edgeless = GraphDomain::from_edges(2, {});
  const auto report = check_gvf(edgeless, ScalarField{{0, 100}, 1.0});
  EXPECT_TRUE(report.gradually_varied());
  EXPECT_EQ(report.max_adjacent_difference, 0.0);
}

TEST(CheckGvf, ToleranceAndStep) {
  EXPECT_TRUE(check_gvf(path3(), ScalarField{{0, 1 + 1e-13, 2}, 1.0}).gradually_varied());
  EXPECT_FALSE(check_gvf(path3(), ScalarField{{0, 1 + 1e-9, 2}, 1.0}).gradually_varied());
  EXPECT_TRUE(check_gvf(path3(), ScalarField{{0, 0.5, 1.0}, 0.5}).gradually_varied());
  EXPECT_FALSE(check_gvf(path3(), ScalarField{{0, 0.5, 1.5}, 0.5}).gradually_varied());
}

TEST(CheckGvf, Errors) {
  EXPECT_THROW(check_gvf(path3(), ScalarField{{0, 1}, 1.0}), InvalidInput);
  EXPECT_THROW(check_gvf(path3(), ScalarField{{0, 1, 2}, 0.0}), InvalidInput);
}

TEST(CheckFeasibility, StarLeavesAreFeasible) {
  const auto report = check_feasibility(star().graph, leaves(1, 3), 1.0);
  EXPECT_TRUE(report.feasible);
  EXPECT_FALSE(report.witness);
}

TEST(CheckFeasibility, SteepPathIsInfeasibleWithWitness) {
  const auto report = check_feasibility(path3(), BoundaryData({{0, 0.0}, {2, 5.0}}), 1.0);
  ASSERT_FALSE(report.feasible);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->p, 0u);
  EXPECT_EQ(report.witness->q, 2u);
  EXPECT_EQ(report.witness->difference, 5.0);
  EXPECT_EQ(report.witness->distance, 2u);
}

TEST(CheckFeasibility, WitnessIsLexicographicallyFirst) {
  // Path 0-1-2-3; pairs (1,3) and (2,3) fail, (0,*) do not.
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}};
  const auto graph = GraphDomain::from_edges(4, edges);
  const auto report =
      check_feasibility(graph, BoundaryData({{0, 2.0}, {1, 2.0}, {2, 2.0}, {3, 5.0}}), 1.0);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->p, 1u);
  EXPECT_EQ(report.witness->q, 3u);
}

TEST(CheckFeasibility, SinglePointAndSeparateComponents) {
  EXPECT_TRUE(check_feasibility(path3(), BoundaryData({{1, 42.0}}), 1.0).feasible);
  const auto split = GraphDomain::from_edges(2, {});
  EXPECT_TRUE(check_feasibility(split, BoundaryData({{0, 0.0}, {1, 100.0}}), 1.0).feasible);
}

TEST(CheckFeasibility, Errors) {
  EXPECT_THROW(check_feasibility(path3(), BoundaryData{}, 1.0), InvalidInput);
  EXPECT_THROW(check_feasibility(path3(), BoundaryData({{9, 0.0}}), 1.0), InvalidInput);
  EXPECT_THROW(check_feasibility(path3(), BoundaryData({{0, 0.0}}), -1.0), InvalidInput);
}

TEST(Envelopes, StarCenterIsForcedToTwo) {
  const auto s = star();
  const auto lower = lower_envelope(s.graph, leaves(1, 3), 1.0);
  const auto upper = upper_envelope(s.graph, leaves(1, 3), 1.0);
  EXPECT_EQ(lower[s.center], 2.0);
  EXPECT_EQ(upper[s.center], 2.0);
  for (Vertex v = 1; v <= 4; ++v) {
    EXPECT_EQ(lower[v], v == 1 ? 1.0 : 3.0);
    EXPECT_EQ(upper[v], v == 1 ? 1.0 : 3.0);
  }
}

TEST(Envelopes, RigidPath) {
  const BoundaryData b({{0, 0.0}, {2, 2.0}});
  EXPECT_EQ(lower_envelope(path3(), b, 1.0).values, (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(upper_envelope(path3(), b, 1.0).values, (std::vector<double>{0, 1, 2}));
}

TEST(Envelopes, FullDataIsReturnedUnchanged) {
  const BoundaryData b({{0, 3.0}, {1, 2.5}, {2, 3.0}});
  EXPECT_EQ(lower_envelope(path3(), b, 1.0).values, (std::vector<double>{3, 2.5, 3}));
  EXPECT_EQ(upper_envelope(path3(), b, 1.0).values, (std::vector<double>{3, 2.5, 3}));
}

TEST(Envelopes, InfeasibleAndUnanchoredInputsThrow) {
  try {
    lower_envelope(path3(), BoundaryData({{0, 0.0}, {2, 5.0}}), 1.0);
    FAIL() << "expected InfeasibleBoundary";
  } catch (const InfeasibleBoundary& e) {
    EXPECT_EQ(e.witness().p, 0u);
    EXPECT_EQ(e.witness().q, 2u);
  }
  const auto split = GraphDomain::from_edges(2, {});
  EXPECT_THROW(upper_envelope(split, BoundaryData({{0, 0.0}}), 1.0), UnanchoredComponent);
}

TEST(Envelopes, MatchTheDefiningFormula) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = static_cast<std::size_t>(testing::uniform_int(rng, 1, 8));
    const auto h = static_cast<std::size_t>(testing::uniform_int(rng, 1, 8));
    const auto graph = to_graph(build_grid(w, h, testing::random_mask(rng, w, h, 0.7))).graph;
    const double step = trial % 3 == 0 ? 0.5 : 1.0;
    auto b = testing::random_feasible_boundary(rng, graph, 4, 6);
    if (step != 1.0) {
      BoundaryData scaled;
      for (const auto& [v, f] : b.entries()) scaled.set(v, f * step);
      b = scaled;
    }
    EXPECT_EQ(lower_envelope(graph, b, step).values, testing::formula_envelope(graph, b, step, true));
    EXPECT_EQ(upper_envelope(graph, b, step).values, testing::formula_envelope(graph, b, step, false));
  }
}

TEST(Envelopes, SoundnessBracketingAndAnchorFidelity) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto graph = to_graph(build_grid(9, 9, testing::random_mask(rng, 9, 9, 0.75))).graph;
    const auto b = testing::random_feasible_boundary(rng, graph, 6, 8);
    const auto lower = lower_envelope(graph, b, 1.0);
    const auto upper = upper_envelope(graph, b, 1.0);
    EXPECT_TRUE(check_gvf(graph, lower).gradually_varied());
    EXPECT_TRUE(check_gvf(graph, upper).gradually_varied());
    for (Vertex v = 0; v < graph.vertex_count(); ++v) EXPECT_LE(lower[v], upper[v]);
    for (const auto& [q, f] : b.entries()) {
      EXPECT_EQ(lower[q], f);
      EXPECT_EQ(upper[q], f);
    }
  }
}

TEST(Envelopes, RealValuedDataStaysGraduallyVaried) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto graph = to_graph(build_grid(6, 6)).graph;
    BoundaryData b;
    // Scaled integer data with step 0.3 keeps pairwise feasibility.
    const auto drawn = testing::random_feasible_boundary(rng, graph, 5, 6);
    for (const auto& [v, f] : drawn.entries()) {
      b.set(v, f * 0.3 + 0.1);
    }
    ASSERT_TRUE(check_feasibility(graph, b, 0.3).feasible);
    const auto lower = lower_envelope(graph, b, 0.3);
    EXPECT_TRUE(check_gvf(graph, lower).gradually_varied());
    for (const auto& [q, f] : b.entries()) EXPECT_EQ(lower[q], f);
  }
}

TEST(Envelopes, AddingAnAnchorIsMonotone) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto graph = to_graph(build_grid(7, 7, testing::random_mask(rng, 7, 7, 0.8))).graph;
    const auto b = testing::random_feasible_boundary(rng, graph, 4, 6);
    const auto lower = lower_envelope(graph, b, 1.0);
    const auto upper = upper_envelope(graph, b, 1.0);
    // A new anchor drawn inside [L, U] keeps the data feasible.
    const auto v = static_cast<Vertex>(testing::uniform_int(rng, 0, static_cast<long>(graph.vertex_count()) - 1));
    if (b.contains(v)) continue;
    BoundaryData more = b;
    more.set(v, static_cast<double>(testing::uniform_int(rng, static_cast<long>(lower[v]),
                                                          static_cast<long>(upper[v]))));
    const auto lower2 = lower_envelope(graph, more, 1.0);
    const auto upper2 = upper_envelope(graph, more, 1.0);
    for (Vertex u = 0; u < graph.vertex_count(); ++u) {
      EXPECT_GE(lower2[u], lower[u]);
      EXPECT_LE(upper2[u], upper[u]);
    }
  }
}

TEST(Envelopes, BracketEveryIntegerExtension) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto graph = to_graph(build_grid(3, 3, testing::random_mask(rng, 3, 3, 0.8))).graph;
    const auto b = testing::random_feasible_boundary(rng, graph, 2, 4);
    const auto lower = lower_envelope(graph, b, 1.0);
    const auto upper = upper_envelope(graph, b, 1.0);
    std::size_t extensions = 0;
    testing::enumerate_integer_gvfs(graph, 0, 4, [&](const std::vector<int>& g) {
      for (const auto& [q, f] : b.entries())
        if (g[q] != static_cast<int>(f)) return;
      ++extensions;
      for (Vertex v = 0; v < g.size(); ++v) {
        EXPECT_LE(lower[v], g[v]);
        EXPECT_LE(g[v], upper[v]);
      }
    });
    EXPECT_GT(extensions, 0u);
  }
}

TEST(ExtendGvf, StarCenterIsTwoInEveryMode) {
  const auto s = star();
  for (auto mode : {ExtensionMode::lower, ExtensionMode::upper, ExtensionMode::midpoint}) {
    EXPECT_EQ(extend_gvf(s.graph, leaves(1, 3), 1.0, mode)[s.center], 2.0);
    EXPECT_EQ(extend_gvf(s.graph, leaves(3, 1), 1.0, mode)[s.center], 2.0);
  }
}

TEST(ExtendGvf, ZeroCorners) {
  const auto gg = to_graph(build_grid(3, 3));
  const BoundaryData corners({{0, 0.0}, {2, 0.0}, {6, 0.0}, {8, 0.0}});
  // The smallest extension dips away from the corners; the midpoint is flat.
  EXPECT_EQ(extend_gvf(gg.graph, corners, 1.0).values, (std::vector<double>{0, -1, 0, -1, -2, -1, 0, -1, 0}));
  EXPECT_EQ(extend_gvf(gg.graph, corners, 1.0, ExtensionMode::upper).values,
            (std::vector<double>{0, 1, 0, 1, 2, 1, 0, 1, 0}));
  EXPECT_EQ(extend_gvf(gg.graph, corners, 1.0, ExtensionMode::midpoint).values, std::vector<double>(9, 0.0));
}

TEST(ExtendGvf, MidpointRoundsHalfUpOntoTheLattice) {
  // f(0) = 0, f(2) = 1 leaves L = 0 and U = 1 in the middle.
  const BoundaryData b({{0, 0.0}, {2, 1.0}});
  EXPECT_EQ(extend_gvf(path3(), b, 1.0, ExtensionMode::midpoint).values, (std::vector<double>{0, 1, 1}));
  // Path 0-1-2-3 with f(0) = 0, f(3) = 1: L = (0,-1,0,1), U = (0,1,2,1).
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}};
  const auto graph = GraphDomain::from_edges(4, edges);
  EXPECT_EQ(extend_gvf(graph, BoundaryData({{0, 0.0}, {3, 1.0}}), 1.0, ExtensionMode::midpoint).values,
            (std::vector<double>{0, 0, 1, 1}));
}

TEST(ExtendGvf, MidpointStaysOnLatticeWithinEnvelopes) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto graph = to_graph(build_grid(8, 8, testing::random_mask(rng, 8, 8, 0.7))).graph;
    const double step = trial % 2 == 0 ? 1.0 : 0.25;
    BoundaryData b;
    const auto drawn = testing::random_feasible_boundary(rng, graph, 5, 6);
    for (const auto& [v, f] : drawn.entries()) {
      b.set(v, f * step);
    }
    const auto lower = lower_envelope(graph, b, step);
    const auto upper = upper_envelope(graph, b, step);
    const auto mid = extend_gvf(graph, b, step, ExtensionMode::midpoint);
    EXPECT_TRUE(check_gvf(graph, mid).gradually_varied());
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      EXPECT_LE(lower[v], mid[v]);
      EXPECT_LE(mid[v], upper[v]);
      EXPECT_EQ(mid[v] / step, std::round(mid[v] / step));
    }
  }
}

TEST(ExtendGvf, MidpointNeedsLatticeAnchors) {
  EXPECT_THROW(extend_gvf(path3(), BoundaryData({{0, 0.5}}), 1.0, ExtensionMode::midpoint),
               InvalidInput);
}

}  // namespace
}  // namespace gradvar
