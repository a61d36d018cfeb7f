#include "gradvar/gvf.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace gradvar {
namespace {

void validate_step(double level_step) {
  if (!(level_step > 0.0) || !std::isfinite(level_step)) {
    throw InvalidInput("level step must be a positive finite number");
  }
}

void validate_boundary(const GraphDomain& domain, const BoundaryData& boundary) {
  if (boundary.empty()) throw InvalidInput("boundary data is empty");
  boundary.validate(domain);
}

// Result of a multi-source sweep: for every reached vertex, the anchor that
// attains the extremum and the hop count to it.
struct Sweep {
  std::vector<double> key;
  std::vector<Vertex> source;
  std::vector<std::size_t> hops;
};

// Maximizes sign * f(q) - step * d(v, q) over anchors q, one Dijkstra pass with
// unit edge costs. sign = +1 yields the lower envelope, sign = -1 the upper.
Sweep envelope_sweep(const GraphDomain& domain, const BoundaryData& boundary, double level_step,
                     double sign) {
  const std::size_t n = domain.vertex_count();
  Sweep sweep{std::vector<double>(n, -INFINITY), std::vector<Vertex>(n, 0),
              std::vector<std::size_t>(n, kUnreachable)};

  using Entry = std::pair<double, Vertex>;
  std::priority_queue<Entry> queue;
  for (const auto& [q, value] : boundary.entries()) {
    const double key = sign * value;
    if (key > sweep.key[q]) {
      sweep.key[q] = key;
      sweep.source[q] = q;
      sweep.hops[q] = 0;
      queue.emplace(key, q);
    }
  }

  while (!queue.empty()) {
    const auto [key, v] = queue.top();
    queue.pop();
    if (key != sweep.key[v]) continue;
    const Vertex src = sweep.source[v];
    const std::size_t next_hops = sweep.hops[v] + 1;
    const double candidate =
        sign * boundary.entries().at(src) - level_step * static_cast<double>(next_hops);
    for (Vertex u : domain.neighbors(v)) {
      if (candidate > sweep.key[u]) {
        sweep.key[u] = candidate;
        sweep.source[u] = src;
        sweep.hops[u] = next_hops;
        queue.emplace(candidate, u);
      }
    }
  }
  return sweep;
}

// Lexicographically first violating pair, by one BFS per anchor.
std::optional<FeasibilityWitness> first_violation(const GraphDomain& domain,
                                                  const BoundaryData& boundary,
                                                  double level_step) {
  for (auto it = boundary.entries().begin(); it != boundary.entries().end(); ++it) {
    const auto [p, fp] = *it;
    const auto dist = bfs_distances(domain, p);
    for (auto jt = std::next(it); jt != boundary.entries().end(); ++jt) {
      const auto [q, fq] = *jt;
      if (dist[q] == kUnreachable) continue;
      const double diff = std::abs(fq - fp);
      if (diff > level_step * static_cast<double>(dist[q]) + kLevelTolerance) {
        return FeasibilityWitness{p, q, diff, dist[q]};
      }
    }
  }
  return std::nullopt;
}

void require_feasible(const GraphDomain& domain, const BoundaryData& boundary, double level_step) {
  const auto report = check_feasibility(domain, boundary, level_step);
  if (!report.feasible) throw InfeasibleBoundary(*report.witness);
}

ScalarField envelope(const GraphDomain& domain, const BoundaryData& boundary, double level_step,
                     double sign) {
  validate_step(level_step);
  validate_boundary(domain, boundary);
  require_anchored_components(domain, boundary);
  require_feasible(domain, boundary, level_step);

  const auto sweep = envelope_sweep(domain, boundary, level_step, sign);
  ScalarField field{std::vector<double>(domain.vertex_count()), level_step};
  for (Vertex v = 0; v < domain.vertex_count(); ++v) {
    const double anchor = boundary.entries().at(sweep.source[v]);
    field.values[v] = anchor - sign * level_step * static_cast<double>(sweep.hops[v]);
  }
  // Pin anchors; feasibility only guarantees the sweep reproduces them up to
  // kLevelTolerance.
  for (const auto& [q, value] : boundary.entries()) field.values[q] = value;
  return field;
}

bool on_lattice(double value, double level_step) {
  return std::abs(value - level_step * std::round(value / level_step)) <= kLevelTolerance;
}

}  // namespace

ViolationReport check_gvf(const GraphDomain& domain, const ScalarField& field) {
  validate_step(field.level_step);
  if (field.size() != domain.vertex_count()) {
    throw InvalidInput("field has " + std::to_string(field.size()) + " values but the domain has " +
                       std::to_string(domain.vertex_count()) + " vertices");
  }
  ViolationReport report;
  for (const auto& [u, v] : domain.edges()) {
    const double diff = std::abs(field[u] - field[v]);
    report.max_adjacent_difference = std::max(report.max_adjacent_difference, diff);
    if (diff > field.level_step + kLevelTolerance) report.violations.push_back({u, v, diff});
  }
  return report;
}

FeasibilityReport check_feasibility(const GraphDomain& domain, const BoundaryData& boundary,
                                    double level_step) {
  validate_step(level_step);
  validate_boundary(domain, boundary);

  // A violating pair (p, q) with f(p) > f(q) makes the unpinned lower sweep
  // exceed f(q) at q, so one sweep decides the common feasible case.
  const auto sweep = envelope_sweep(domain, boundary, level_step, 1.0);
  const bool suspicious = std::any_of(
      boundary.entries().begin(), boundary.entries().end(),
      [&](const auto& entry) { return sweep.key[entry.first] > entry.second + kLevelTolerance; });
  if (!suspicious) return {};

  if (auto witness = first_violation(domain, boundary, level_step)) {
    return {false, witness};
  }
  return {};
}

InfeasibleBoundary::InfeasibleBoundary(FeasibilityWitness witness)
    : Error("boundary data is not extendable: |f(" + std::to_string(witness.p) + ") - f(" +
            std::to_string(witness.q) + ")| = " + std::to_string(witness.difference) +
            " exceeds step * distance with distance " + std::to_string(witness.distance)),
      witness_(witness) {}

ScalarField lower_envelope(const GraphDomain& domain, const BoundaryData& boundary,
                           double level_step) {
  return envelope(domain, boundary, level_step, 1.0);
}

ScalarField upper_envelope(const GraphDomain& domain, const BoundaryData& boundary,
                           double level_step) {
  return envelope(domain, boundary, level_step, -1.0);
}

ScalarField extend_gvf(const GraphDomain& domain, const BoundaryData& boundary, double level_step,
                       ExtensionMode mode) {
  switch (mode) {
    case ExtensionMode::lower:
      return lower_envelope(domain, boundary, level_step);
    case ExtensionMode::upper:
      return upper_envelope(domain, boundary, level_step);
    case ExtensionMode::midpoint:
      break;
  }

  validate_step(level_step);
  for (const auto& [q, value] : boundary.entries()) {
    if (!on_lattice(value, level_step)) {
      throw InvalidInput("midpoint extension needs anchors on the level lattice; vertex " +
                         std::to_string(q) + " has value " + std::to_string(value));
    }
  }
  const auto lower = lower_envelope(domain, boundary, level_step);
  const auto upper = upper_envelope(domain, boundary, level_step);
  ScalarField field{std::vector<double>(domain.vertex_count()), level_step};
  for (Vertex v = 0; v < domain.vertex_count(); ++v) {
    const double mid = 0.5 * (lower[v] + upper[v]);
    field.values[v] = level_step * std::floor(mid / level_step + 0.5);
  }
  for (const auto& [q, value] : boundary.entries()) field.values[q] = value;
  return field;
}

}  // namespace gradvar
