#include <gtest/gtest.h>

#include <algorithm>

#include "gradvar/domain.hpp"
#include "oracles.hpp"

namespace gradvar {
namespace {

std::vector<bool> cross_mask() {
  return {false, true, false, true, true, true, false, true, false};
}

TEST(BuildGrid, DefaultMaskIsAllInside) {
  const auto grid = build_grid(3, 3);
  EXPECT_EQ(grid.inside_count(), 9u);
  EXPECT_EQ(to_graph(grid).graph.vertex_count(), 9u);
}

TEST(BuildGrid, SingleCellHasNoEdges) {
  const auto graph = to_graph(build_grid(1, 1)).graph;
  EXPECT_EQ(graph.vertex_count(), 1u);
  EXPECT_EQ(graph.edge_count(), 0u);
}

TEST(BuildGrid, LShapeMask) {
  const auto graph = to_graph(build_grid(2, 2, std::vector<bool>{true, true, true, false})).graph;
  EXPECT_EQ(graph.vertex_count(), 3u);
  EXPECT_EQ(graph.edge_count(), 2u);
  EXPECT_TRUE(graph.adjacent(0, 1));
  EXPECT_TRUE(graph.adjacent(0, 2));
  EXPECT_FALSE(graph.adjacent(1, 2));
}

TEST(BuildGrid, RejectsBadInput) {
  EXPECT_THROW(build_grid(0, 3), InvalidInput);
  EXPECT_THROW(build_grid(3, 0), InvalidInput);
  EXPECT_THROW(build_grid(2, 2, std::vector<bool>{true, true, true}), InvalidInput);
  EXPECT_THROW(build_grid(2, 2, std::vector<bool>(4, false)), InvalidInput);
}

TEST(ToGraph, LineOfCellsIsAPath) {
  const auto graph = to_graph(build_grid(3, 1)).graph;
  EXPECT_EQ(graph.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
}

TEST(ToGraph, TwoByTwoIsAFourCycle) {
  const auto graph = to_graph(build_grid(2, 2)).graph;
  EXPECT_EQ(graph.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(graph.degree(v), 2u);
}

TEST(ToGraph, CrossIsAStar) {
  const auto gg = to_graph(build_grid(3, 3, cross_mask()));
  ASSERT_EQ(gg.graph.vertex_count(), 5u);
  const Vertex center = *gg.vertex_at(1, 1);
  EXPECT_EQ(center, 2u);
  EXPECT_EQ(gg.graph.degree(center), 4u);
  for (Vertex v = 0; v < 5; ++v) {
    if (v != center) {
      EXPECT_EQ(gg.graph.degree(v), 1u);
      EXPECT_TRUE(gg.graph.adjacent(v, center));
    }
  }
}

TEST(ToGraph, RandomMasksKeepInvariants) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = static_cast<std::size_t>(testing::uniform_int(rng, 1, 9));
    const auto h = static_cast<std::size_t>(testing::uniform_int(rng, 1, 9));
    const auto grid = build_grid(w, h, testing::random_mask(rng, w, h, 0.6));
    const auto gg = to_graph(grid);
    ASSERT_EQ(gg.graph.vertex_count(), grid.inside_count());
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
      EXPECT_LE(gg.graph.degree(v), 4u);
      const auto cell = gg.vertex_to_cell[v];
      EXPECT_EQ(gg.vertex_at(cell.row, cell.col), v);
      const auto nbrs = gg.graph.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
      EXPECT_EQ(std::adjacent_find(nbrs.begin(), nbrs.end()), nbrs.end());
      for (Vertex u : nbrs) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(gg.graph.adjacent(u, v));
        const auto other = gg.vertex_to_cell[u];
        const auto manhattan = (cell.row > other.row ? cell.row - other.row : other.row - cell.row) +
                               (cell.col > other.col ? cell.col - other.col : other.col - cell.col);
        EXPECT_EQ(manhattan, 1u);
      }
    }
  }
}

TEST(GraphDomain, FromEdgesCollapsesDuplicatesAndRejectsBadEdges) {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
  const auto graph = GraphDomain::from_edges(3, edges);
  EXPECT_EQ(graph.edge_count(), 2u);

  const std::vector<std::pair<Vertex, Vertex>> loop{{0, 0}};
  EXPECT_THROW(GraphDomain::from_edges(2, loop), InvalidInput);
  const std::vector<std::pair<Vertex, Vertex>> out_of_range{{0, 3}};
  EXPECT_THROW(GraphDomain::from_edges(3, out_of_range), InvalidInput);
}

TEST(ConnectedComponents, StarIsOneComponent) {
  const auto graph = to_graph(build_grid(3, 3, cross_mask())).graph;
  const auto comps = connected_components(graph);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 5u);
}

TEST(ConnectedComponents, EdgelessGraphHasSingletons) {
  const auto graph = GraphDomain::from_edges(3, {});
  EXPECT_EQ(connected_components(graph),
            (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
}

TEST(ConnectedComponents, TwoDisjointPaths) {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {2, 3}};
  const auto comps = connected_components(GraphDomain::from_edges(4, edges));
  EXPECT_EQ(comps, (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

TEST(ConnectedComponents, CoverEveryVertexOnce) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto grid = build_grid(7, 7, testing::random_mask(rng, 7, 7, 0.45));
    const auto graph = to_graph(grid).graph;
    const auto dist = testing::floyd_warshall(graph);
    std::vector<int> seen(graph.vertex_count(), 0);
    for (const auto& comp : connected_components(graph)) {
      for (Vertex v : comp) {
        ++seen[v];
        for (Vertex u : comp) EXPECT_LT(dist[u][v], testing::kInf);
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    const auto label = component_labels(graph);
    for (Vertex u = 0; u < graph.vertex_count(); ++u)
      for (Vertex v = 0; v < graph.vertex_count(); ++v)
        EXPECT_EQ(label[u] == label[v], dist[u][v] < testing::kInf);
  }
}

TEST(BoundaryData, ValidateRejectsForeignVertices) {
  const auto graph = GraphDomain::from_edges(2, {});
  BoundaryData boundary({{0, 1.0}, {5, 2.0}});
  EXPECT_THROW(boundary.validate(graph), InvalidInput);
}

TEST(BoundaryData, UnanchoredComponentIsReported) {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {2, 3}};
  const auto graph = GraphDomain::from_edges(4, edges);
  EXPECT_THROW(require_anchored_components(graph, BoundaryData({{0, 1.0}})), UnanchoredComponent);
  EXPECT_NO_THROW(require_anchored_components(graph, BoundaryData({{0, 1.0}, {3, 1.0}})));
}

}  // namespace
}  // namespace gradvar
