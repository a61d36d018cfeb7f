#include "gradvar/domain.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gradvar {

GraphDomain GraphDomain::from_edges(std::size_t vertex_count,
                                    std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") references a vertex outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  GraphDomain graph;
  graph.offsets_.reserve(vertex_count + 1);
  graph.offsets_.push_back(0);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    graph.targets_.insert(graph.targets_.end(), list.begin(), list.end());
    graph.offsets_.push_back(graph.targets_.size());
  }
  return graph;
}

bool GraphDomain::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> GraphDomain::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t GridDomain::inside_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), char{1}));
}

GridDomain build_grid(std::size_t width, std::size_t height, std::optional<std::vector<bool>> mask) {
  if (width == 0 || height == 0) {
    throw InvalidInput("grid dimensions must be positive");
  }
  GridDomain grid;
  grid.width_ = width;
  grid.height_ = height;
  if (mask) {
    if (mask->size() != width * height) {
      throw InvalidInput("mask has " + std::to_string(mask->size()) + " entries, expected " +
                         std::to_string(width * height));
    }
    grid.mask_.assign(mask->begin(), mask->end());
  } else {
    grid.mask_.assign(width * height, 1);
  }
  if (grid.inside_count() == 0) {
    throw InvalidInput("grid has no inside cells");
  }
  return grid;
}

GridGraph to_graph(const GridDomain& grid) {
  GridGraph out;
  out.width = grid.width();
  out.height = grid.height();
  out.cell_to_vertex.assign(grid.width() * grid.height(), std::nullopt);
  for (std::size_t r = 0; r < grid.height(); ++r) {
    for (std::size_t c = 0; c < grid.width(); ++c) {
      if (!grid.inside(r, c)) continue;
      out.cell_to_vertex[r * grid.width() + c] = out.vertex_to_cell.size();
      out.vertex_to_cell.push_back({r, c});
    }
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < out.vertex_to_cell.size(); ++v) {
    const auto [r, c] = out.vertex_to_cell[v];
    if (c + 1 < grid.width()) {
      if (auto right = out.vertex_at(r, c + 1)) edges.emplace_back(v, *right);
    }
    if (r + 1 < grid.height()) {
      if (auto down = out.vertex_at(r + 1, c)) edges.emplace_back(v, *down);
    }
  }
  out.graph = GraphDomain::from_edges(out.vertex_to_cell.size(), edges);
  return out;
}

std::vector<std::size_t> component_labels(const GraphDomain& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> label(n, kUnreachable);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex seed = 0; seed < n; ++seed) {
    if (label[seed] != kUnreachable) continue;
    label[seed] = next;
    stack.push_back(seed);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : graph.neighbors(v)) {
        if (label[u] == kUnreachable) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connected_components(const GraphDomain& graph) {
  const auto label = component_labels(graph);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> components(count);
  for (Vertex v = 0; v < label.size(); ++v) components[label[v]].push_back(v);
  return components;
}

BfsTree bfs_tree(const GraphDomain& graph, Vertex source) {
  if (!graph.contains(source)) {
    throw InvalidInput("vertex " + std::to_string(source) + " is not in the domain");
  }
  BfsTree tree;
  tree.distance.assign(graph.vertex_count(), kUnreachable);
  tree.parent.assign(graph.vertex_count(), source);
  std::deque<Vertex> queue{source};
  tree.distance[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : graph.neighbors(v)) {
      if (tree.distance[u] == kUnreachable) {
        tree.distance[u] = tree.distance[v] + 1;
        tree.parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  return tree;
}

std::vector<std::size_t> bfs_distances(const GraphDomain& graph, Vertex source) {
  return bfs_tree(graph, source).distance;
}

std::optional<double> BoundaryData::value(Vertex v) const {
  const auto it = entries_.find(v);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> BoundaryData::vertices() const {
  std::vector<Vertex> out;
  out.reserve(entries_.size());
  for (const auto& [v, value] : entries_) out.push_back(v);
  return out;
}

void BoundaryData::validate(const GraphDomain& graph) const {
  for (const auto& [v, value] : entries_) {
    if (!graph.contains(v)) {
      throw InvalidInput("boundary vertex " + std::to_string(v) + " is not in the domain (" +
                         std::to_string(graph.vertex_count()) + " vertices)");
    }
  }
}

void require_anchored_components(const GraphDomain& graph, const BoundaryData& boundary) {
  for (const auto& component : connected_components(graph)) {
    const bool anchored = std::any_of(component.begin(), component.end(),
                                      [&](Vertex v) { return boundary.contains(v); });
    if (!anchored) {
      throw UnanchoredComponent("component containing vertex " + std::to_string(component.front()) +
                                " (" + std::to_string(component.size()) +
                                " vertices) has no boundary value");
    }
  }
}

}  // namespace gradvar
