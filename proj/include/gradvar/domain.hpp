#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gradvar/error.hpp"

namespace gradvar {

using Vertex = std::size_t;

/// Marker returned by distance queries for vertices in another component.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted and duplicate-free; the adjacency is symmetric and
/// has no self-loops. Immutable once built.
class GraphDomain {
 public:
  GraphDomain() = default;

  /// Builds a graph on `vertex_count` vertices. Duplicate edges (in either
  /// orientation) are collapsed. Throws InvalidInput on self-loops or indices
  /// outside [0, vertex_count).
  static GraphDomain from_edges(std::size_t vertex_count,
                                std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(Vertex v) const { return v < vertex_count(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Rectangular grid with an inside/outside mask, stored row-major.
class GridDomain {
 public:
  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  bool inside(std::size_t row, std::size_t col) const { return mask_[row * width_ + col] != 0; }
  std::size_t inside_count() const;
  const std::vector<char>& mask() const { return mask_; }

 private:
  friend GridDomain build_grid(std::size_t, std::size_t, std::optional<std::vector<bool>>);
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<char> mask_;
};

/// Validates dimensions and mask. The default mask marks every cell inside.
GridDomain build_grid(std::size_t width, std::size_t height,
                      std::optional<std::vector<bool>> mask = std::nullopt);

/// Graph induced by the inside cells of a grid under 4-adjacency, together
/// with the cell <-> vertex bijection. Vertices enumerate inside cells in
/// row-major order.
struct GridGraph {
  GraphDomain graph;
  std::vector<Cell> vertex_to_cell;
  /// Row-major, one entry per grid cell; empty for outside cells.
  std::vector<std::optional<Vertex>> cell_to_vertex;
  std::size_t width = 0;
  std::size_t height = 0;

  std::optional<Vertex> vertex_at(std::size_t row, std::size_t col) const {
    return cell_to_vertex[row * width + col];
  }
};

GridGraph to_graph(const GridDomain& grid);

/// Partition of the vertices into connected components. Components are listed
/// by their smallest vertex; members are ascending.
std::vector<std::vector<Vertex>> connected_components(const GraphDomain& graph);

/// Component id per vertex, consistent with connected_components ordering.
std::vector<std::size_t> component_labels(const GraphDomain& graph);

/// Breadth-first hop distances from `source`; kUnreachable elsewhere.
std::vector<std::size_t> bfs_distances(const GraphDomain& graph, Vertex source);

/// Breadth-first distances and parent pointers (parent of the source is itself).
struct BfsTree {
  std::vector<std::size_t> distance;
  std::vector<Vertex> parent;
};
BfsTree bfs_tree(const GraphDomain& graph, Vertex source);

/// Fixed values on a subset J of the vertices.
class BoundaryData {
 public:
  BoundaryData() = default;
  explicit BoundaryData(std::map<Vertex, double> entries) : entries_(std::move(entries)) {}

  void set(Vertex v, double value) { entries_[v] = value; }
  bool contains(Vertex v) const { return entries_.count(v) != 0; }
  std::optional<double> value(Vertex v) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Vertex, double>& entries() const { return entries_; }
  std::vector<Vertex> vertices() const;

  /// Throws InvalidInput if any keyed vertex is outside `graph`.
  void validate(const GraphDomain& graph) const;

 private:
  std::map<Vertex, double> entries_;
};

/// Throws UnanchoredComponent naming the first component (by smallest vertex)
/// that has no vertex in `boundary`.
void require_anchored_components(const GraphDomain& graph, const BoundaryData& boundary);

}  // namespace gradvar
