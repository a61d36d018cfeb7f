#include <gtest/gtest.h>

#include <cmath>

#include "gradvar/analysis.hpp"
#include "oracles.hpp"

namespace gradvar {
namespace {

GraphDomain star() {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  return GraphDomain::from_edges(5, edges);
}

TEST(GeodesicDistance, SmallExamples) {
  const auto grid = to_graph(build_grid(3, 3)).graph;
  EXPECT_EQ(geodesic_distance(grid, 0, 8), 4u);
  EXPECT_EQ(geodesic_distance(grid, 4, 4), 0u);
  EXPECT_EQ(geodesic_distance(star(), 1, 3), 2u);
  const auto split = GraphDomain::from_edges(2, {});
  EXPECT_FALSE(geodesic_distance(split, 0, 1));
  EXPECT_FALSE(shortest_path(split, 0, 1));
  EXPECT_THROW(geodesic_distance(split, 0, 2), InvalidInput);
}

TEST(GeodesicDistance, MatchesFloydWarshallAndIsAMetric) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto graph = to_graph(build_grid(6, 6, testing::random_mask(rng, 6, 6, 0.7))).graph;
    const auto fw = testing::floyd_warshall(graph);
    const std::size_t n = graph.vertex_count();
    for (Vertex p = 0; p < n; ++p) {
      for (Vertex q = 0; q < n; ++q) {
        const auto d = geodesic_distance(graph, p, q);
        ASSERT_EQ(d.has_value(), fw[p][q] < testing::kInf);
        if (!d) continue;
        EXPECT_EQ(static_cast<long>(*d), fw[p][q]);
        EXPECT_EQ(d, geodesic_distance(graph, q, p));
        EXPECT_EQ(*d == 0, p == q);
        const auto path = shortest_path(graph, p, q);
        ASSERT_TRUE(path);
        EXPECT_NO_THROW(validate_path(graph, *path));
        EXPECT_EQ(path->length(), *d);
        EXPECT_EQ(path->vertices.front(), p);
        EXPECT_EQ(path->vertices.back(), q);
      }
    }
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c)
          if (fw[a][b] < testing::kInf && fw[b][c] < testing::kInf) EXPECT_LE(fw[a][c], fw[a][b] + fw[b][c]);
  }
}

TEST(AverageSlope, SignedOverTheGeodesic) {
  const ScalarField f{{2.5, 1, 3, 3, 3}, 1.0};
  const auto s = average_slope(star(), f, 1, 2);
  EXPECT_EQ(s.geodesic_length, 2u);
  EXPECT_EQ(s.average_slope, 1.0);
  EXPECT_EQ(average_slope(star(), f, 2, 1).average_slope, -1.0);
  EXPECT_EQ(s.witness_path.vertices, (std::vector<Vertex>{1, 0, 2}));
}

TEST(AverageSlope, Errors) {
  const ScalarField f{{0, 0, 0, 0, 0}, 1.0};
  EXPECT_THROW(average_slope(star(), f, 1, 1), InvalidInput);
  EXPECT_THROW(average_slope(GraphDomain::from_edges(2, {}), ScalarField{{0, 1}, 1.0}, 0, 1), InvalidInput);
  EXPECT_THROW(average_slope(star(), ScalarField{{0, 1}, 1.0}, 0, 1), InvalidInput);
}

TEST(MaxBoundarySlope, LeavesOfTheStar) {
  const ScalarField f{{2.5, 1, 3, 3, 3}, 1.0};
  const std::vector<Vertex> leaves{4, 3, 2, 1, 1};
  const auto s = max_boundary_slope(star(), f, leaves);
  EXPECT_EQ(s.from, 1u);
  EXPECT_EQ(s.to, 2u);
  EXPECT_EQ(std::abs(s.average_slope), 1.0);
  EXPECT_THROW(max_boundary_slope(star(), f, std::vector<Vertex>{1}), InvalidInput);
}

TEST(MaxAdjacentDifference, StarFields) {
  const auto harmonic = max_adjacent_difference(star(), ScalarField{{2.5, 1, 3, 3, 3}, 1.0});
  EXPECT_EQ(harmonic.difference, 1.5);
  EXPECT_EQ(harmonic.edge, (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_EQ(max_adjacent_difference(star(), ScalarField{{2, 1, 3, 3, 3}, 1.0}).difference, 1.0);
  EXPECT_FALSE(max_adjacent_difference(GraphDomain::from_edges(1, {}), ScalarField{{4}, 1.0}).edge);
}

TEST(Telescoping, ExactOnRandomIntegerWalks) {
  testing::Rng rng(9);
  const auto graph = to_graph(build_grid(8, 8)).graph;
  for (int trial = 0; trial < 1000; ++trial) {
    ScalarField f;
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
      f.values.push_back(static_cast<double>(testing::uniform_int(rng, -1000, 1000)));
    PathRecord path{{static_cast<Vertex>(testing::uniform_int(rng, 0, 63))}};
    const auto steps = testing::uniform_int(rng, 0, 40);
    for (long i = 0; i < steps; ++i) {
      const auto nbrs = graph.neighbors(path.vertices.back());
      path.vertices.push_back(nbrs[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<long>(nbrs.size()) - 1))]);
    }
    const auto t = telescoping_check(graph, f, path);
    EXPECT_EQ(t.endpoint_difference, t.edge_sum);
  }
}

TEST(Telescoping, RejectsBrokenPaths) {
  const ScalarField f{{0, 1, 2, 3, 4}, 1.0};
  EXPECT_THROW(telescoping_check(star(), f, PathRecord{{1, 2}}), InvalidInput);
  EXPECT_THROW(telescoping_check(star(), f, PathRecord{}), InvalidInput);
  const auto single = telescoping_check(star(), f, PathRecord{{3}});
  EXPECT_EQ(single.endpoint_difference, 0.0);
  EXPECT_EQ(single.edge_sum, 0.0);
}

TEST(SemiPreserving, StarHarmonicAndGvf) {
  const std::vector<Vertex> leaves{1, 2, 3, 4};
  const auto harmonic = semi_preserving_ratio(star(), ScalarField{{2.5, 1, 3, 3, 3}, 1.0}, leaves);
  EXPECT_EQ(harmonic.numerator, 1.5);
  EXPECT_EQ(harmonic.denominator, 1.0);
  EXPECT_EQ(harmonic.ratio, 1.5);
  const auto gvf = semi_preserving_ratio(star(), ScalarField{{2, 1, 3, 3, 3}, 1.0}, leaves);
  EXPECT_EQ(gvf.ratio, 1.0);
}

TEST(SemiPreserving, FlatBoundaryIsDegenerate) {
  const std::vector<Vertex> leaves{1, 2, 3, 4};
  const auto r = semi_preserving_ratio(star(), ScalarField{{1, 3, 3, 3, 3}, 1.0}, leaves);
  EXPECT_TRUE(r.degenerate());
  EXPECT_EQ(r.numerator, 2.0);
  EXPECT_EQ(r.denominator, 0.0);
}

TEST(KNormSlope, ForwardDifferencesOnAPlane) {
  const auto gg = to_graph(build_grid(4, 4));
  ScalarField f;
  for (const auto& cell : gg.vertex_to_cell) f.values.push_back(3.0 * cell.col + 4.0 * cell.row);
  const std::vector<Vertex> corners{0, 3, 12, 15};
  const std::vector<double> ks{1.0, 2.0};
  const auto report = k_norm_slope_report(gg, f, corners, ks);
  ASSERT_EQ(report.size(), 2u);
  EXPECT_EQ(report[0].max_gradient, 7.0);
  EXPECT_NEAR(report[1].max_gradient, 5.0, 1e-12);
  // Steepest corner pair is (0, 12): rise 12 over 3 hops.
  EXPECT_NEAR(*report[0].ratio, 7.0 / 4.0, 1e-12);
  EXPECT_THROW(k_norm_slope_report(gg, f, corners, std::vector<double>{0.0}), InvalidInput);
}

}  // namespace
}  // namespace gradvar
