#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradvar/domain.hpp"
#include "gradvar/gvf.hpp"

namespace gradvar {

/// A walk v0, v1, ..., vk with consecutive vertices adjacent.
struct PathRecord {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Throws InvalidInput unless `path` is non-empty and every step is an edge.
void validate_path(const GraphDomain& domain, const PathRecord& path);

/// Hop distance between p and q, or nullopt when they lie in different
/// components.
std::optional<std::size_t> geodesic_distance(const GraphDomain& domain, Vertex p, Vertex q);

/// One shortest path from p to q (BFS parent order), or nullopt if unreachable.
std::optional<PathRecord> shortest_path(const GraphDomain& domain, Vertex p, Vertex q);

struct SlopeResult {
  Vertex from = 0;
  Vertex to = 0;
  std::size_t geodesic_length = 0;
  /// (f(to) - f(from)) / geodesic_length
  double average_slope = 0.0;
  PathRecord witness_path;
};

/// Average slope along a geodesic. Any other path between the endpoints has
/// the same rise and at least the same length, so this is the largest
/// magnitude over all paths.
SlopeResult average_slope(const GraphDomain& domain, const ScalarField& field, Vertex p, Vertex q);

/// Pair (p < q) of `boundary_set` in a common component maximizing
/// |average_slope|; ties keep the lexicographically first pair.
SlopeResult max_boundary_slope(const GraphDomain& domain, const ScalarField& field,
                               std::span<const Vertex> boundary_set);

struct EdgeDifference {
  double difference = 0.0;
  /// Maximizing edge (u < v); empty for edgeless domains.
  std::optional<std::pair<Vertex, Vertex>> edge;
};

/// Discrete gradient magnitude proxy: max |f(u) - f(v)| over edges.
EdgeDifference max_adjacent_difference(const GraphDomain& domain, const ScalarField& field);

struct TelescopingResult {
  double endpoint_difference = 0.0;
  double edge_sum = 0.0;
};

/// f(v_k) - f(v_0) next to the sum of per-edge differences along the path.
TelescopingResult telescoping_check(const GraphDomain& domain, const ScalarField& field,
                                    const PathRecord& path);

struct SemiPreservingResult {
  double numerator = 0.0;
  double denominator = 0.0;
  /// numerator / denominator; empty when the denominator is zero.
  std::optional<double> ratio;
  EdgeDifference numerator_witness;
  SlopeResult denominator_witness;

  bool degenerate() const { return !ratio.has_value(); }
};

/// max adjacent difference over the domain divided by the max boundary slope.
SemiPreservingResult semi_preserving_ratio(const GraphDomain& domain, const ScalarField& field,
                                           std::span<const Vertex> boundary_set);

struct KNormSlopeEntry {
  double k = 0.0;
  /// max over cells with both forward neighbors inside of
  /// (|dx|^k + |dy|^k)^(1/k), dx and dy being forward differences.
  double max_gradient = 0.0;
  /// max_gradient / max boundary slope; empty when that slope is zero.
  std::optional<double> ratio;
};

/// Diagnostic for the k-norm gradient versus boundary slope question on grid
/// domains. Reported, never asserted.
std::vector<KNormSlopeEntry> k_norm_slope_report(const GridGraph& grid, const ScalarField& field,
                                                 std::span<const Vertex> boundary_set,
                                                 std::span<const double> ks);

}  // namespace gradvar
