#include "gradvar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gradvar {
namespace {

void require_vertex(const GraphDomain& domain, Vertex v) {
  if (!domain.contains(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the domain");
  }
}

void require_field(const GraphDomain& domain, const ScalarField& field) {
  if (field.size() != domain.vertex_count()) {
    throw InvalidInput("field has " + std::to_string(field.size()) + " values but the domain has " +
                       std::to_string(domain.vertex_count()) + " vertices");
  }
}

PathRecord path_from_tree(const BfsTree& tree, Vertex source, Vertex target) {
  PathRecord path;
  for (Vertex v = target; v != source; v = tree.parent[v]) path.vertices.push_back(v);
  path.vertices.push_back(source);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> vertices) {
  std::vector<Vertex> out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void validate_path(const GraphDomain& domain, const PathRecord& path) {
  if (path.vertices.empty()) throw InvalidInput("path is empty");
  for (Vertex v : path.vertices) require_vertex(domain, v);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    if (!domain.adjacent(path.vertices[i], path.vertices[i + 1])) {
      throw InvalidInput("path step " + std::to_string(i) + " (" +
                         std::to_string(path.vertices[i]) + " -> " +
                         std::to_string(path.vertices[i + 1]) + ") is not an edge");
    }
  }
}

std::optional<std::size_t> geodesic_distance(const GraphDomain& domain, Vertex p, Vertex q) {
  require_vertex(domain, q);
  const auto dist = bfs_distances(domain, p);
  if (dist[q] == kUnreachable) return std::nullopt;
  return dist[q];
}

std::optional<PathRecord> shortest_path(const GraphDomain& domain, Vertex p, Vertex q) {
  require_vertex(domain, q);
  const auto tree = bfs_tree(domain, p);
  if (tree.distance[q] == kUnreachable) return std::nullopt;
  return path_from_tree(tree, p, q);
}

SlopeResult average_slope(const GraphDomain& domain, const ScalarField& field, Vertex p, Vertex q) {
  require_field(domain, field);
  require_vertex(domain, p);
  require_vertex(domain, q);
  if (p == q) throw InvalidInput("average slope needs two distinct vertices");
  auto path = shortest_path(domain, p, q);
  if (!path) {
    throw InvalidInput("vertices " + std::to_string(p) + " and " + std::to_string(q) +
                       " are in different components");
  }
  SlopeResult result;
  result.from = p;
  result.to = q;
  result.geodesic_length = path->length();
  result.average_slope = (field[q] - field[p]) / static_cast<double>(result.geodesic_length);
  result.witness_path = std::move(*path);
  return result;
}

SlopeResult max_boundary_slope(const GraphDomain& domain, const ScalarField& field,
                               std::span<const Vertex> boundary_set) {
  require_field(domain, field);
  const auto boundary = sorted_unique(boundary_set);
  for (Vertex v : boundary) require_vertex(domain, v);
  if (boundary.size() < 2) throw InvalidInput("max boundary slope needs at least two vertices");

  std::optional<SlopeResult> best;
  double best_magnitude = -1.0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const Vertex p = boundary[i];
    const auto tree = bfs_tree(domain, p);
    std::optional<Vertex> improved;
    for (std::size_t j = i + 1; j < boundary.size(); ++j) {
      const Vertex q = boundary[j];
      const std::size_t d = tree.distance[q];
      if (d == kUnreachable) continue;
      const double slope = (field[q] - field[p]) / static_cast<double>(d);
      if (std::abs(slope) > best_magnitude) {
        best_magnitude = std::abs(slope);
        best = SlopeResult{p, q, d, slope, {}};
        improved = q;
      }
    }
    if (improved) best->witness_path = path_from_tree(tree, p, *improved);
  }
  if (!best) throw InvalidInput("no two boundary vertices share a component");
  return *best;
}

EdgeDifference max_adjacent_difference(const GraphDomain& domain, const ScalarField& field) {
  require_field(domain, field);
  EdgeDifference out;
  for (const auto& edge : domain.edges()) {
    const double diff = std::abs(field[edge.first] - field[edge.second]);
    if (!out.edge || diff > out.difference) {
      out.difference = diff;
      out.edge = edge;
    }
  }
  return out;
}

TelescopingResult telescoping_check(const GraphDomain& domain, const ScalarField& field,
                                    const PathRecord& path) {
  require_field(domain, field);
  validate_path(domain, path);
  TelescopingResult result;
  result.endpoint_difference = field[path.vertices.back()] - field[path.vertices.front()];
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    result.edge_sum += field[path.vertices[i + 1]] - field[path.vertices[i]];
  }
  return result;
}

SemiPreservingResult semi_preserving_ratio(const GraphDomain& domain, const ScalarField& field,
                                           std::span<const Vertex> boundary_set) {
  SemiPreservingResult result;
  result.numerator_witness = max_adjacent_difference(domain, field);
  result.denominator_witness = max_boundary_slope(domain, field, boundary_set);
  result.numerator = result.numerator_witness.difference;
  result.denominator = std::abs(result.denominator_witness.average_slope);
  if (result.denominator > 0.0) result.ratio = result.numerator / result.denominator;
  return result;
}

std::vector<KNormSlopeEntry> k_norm_slope_report(const GridGraph& grid, const ScalarField& field,
                                                 std::span<const Vertex> boundary_set,
                                                 std::span<const double> ks) {
  const double slope = std::abs(max_boundary_slope(grid.graph, field, boundary_set).average_slope);
  std::vector<KNormSlopeEntry> report;
  for (double k : ks) {
    if (!(k > 0.0)) throw InvalidInput("k-norm exponent must be positive");
    KNormSlopeEntry entry{k, 0.0, std::nullopt};
    for (Vertex v = 0; v < grid.vertex_to_cell.size(); ++v) {
      const auto [row, col] = grid.vertex_to_cell[v];
      if (row + 1 >= grid.height || col + 1 >= grid.width) continue;
      const auto right = grid.vertex_at(row, col + 1);
      const auto down = grid.vertex_at(row + 1, col);
      if (!right || !down) continue;
      const double dx = std::abs(field[*right] - field[v]);
      const double dy = std::abs(field[*down] - field[v]);
      const double norm = std::pow(std::pow(dx, k) + std::pow(dy, k), 1.0 / k);
      entry.max_gradient = std::max(entry.max_gradient, norm);
    }
    if (slope > 0.0) entry.ratio = entry.max_gradient / slope;
    report.push_back(entry);
  }
  return report;
}

}  // namespace gradvar
