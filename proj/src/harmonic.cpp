#include "gradvar/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gradvar {
namespace {

void check_preconditions(const GraphDomain& domain, const BoundaryData& boundary) {
  if (boundary.empty()) throw InvalidInput("boundary data is empty");
  boundary.validate(domain);
  for (Vertex v = 0; v < domain.vertex_count(); ++v) {
    if (domain.degree(v) == 0 && !boundary.contains(v)) {
      throw InvalidInput("interior vertex " + std::to_string(v) + " has no neighbors");
    }
  }
  require_anchored_components(domain, boundary);
}

double neighbor_mean(const GraphDomain& domain, const std::vector<double>& values, Vertex v) {
  double sum = 0.0;
  for (Vertex u : domain.neighbors(v)) sum += values[u];
  return sum / static_cast<double>(domain.degree(v));
}

double max_interior_residual(const GraphDomain& domain, const std::vector<double>& values,
                             const std::vector<Vertex>& interior) {
  double worst = 0.0;
  for (Vertex v : interior) {
    worst = std::max(worst, std::abs(values[v] - neighbor_mean(domain, values, v)));
  }
  return worst;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw InvalidInput("solver tolerance must be positive");
  if (max_iterations == 0) throw InvalidInput("max_iterations must be positive");
  if (!(omega > 0.0 && omega < 2.0)) throw InvalidInput("omega must lie in (0, 2)");
}

SolveResult solve_dirichlet(const GraphDomain& domain, const BoundaryData& boundary,
                            const SolverConfig& config) {
  config.validate();
  check_preconditions(domain, boundary);

  double boundary_sum = 0.0;
  for (const auto& [v, value] : boundary.entries()) boundary_sum += value;
  const double initial = boundary_sum / static_cast<double>(boundary.size());

  std::vector<double> values(domain.vertex_count(), initial);
  std::vector<Vertex> interior;
  for (Vertex v = 0; v < domain.vertex_count(); ++v) {
    if (auto fixed = boundary.value(v)) {
      values[v] = *fixed;
    } else {
      interior.push_back(v);
    }
  }

  SolveResult result;
  result.final_residual = max_interior_residual(domain, values, interior);
  std::vector<double> next = values;
  while (result.final_residual > config.tolerance && result.iterations < config.max_iterations) {
    switch (config.method) {
      case SolverMethod::jacobi:
        for (Vertex v : interior) next[v] = neighbor_mean(domain, values, v);
        std::swap(values, next);
        break;
      case SolverMethod::gauss_seidel:
        for (Vertex v : interior) values[v] = neighbor_mean(domain, values, v);
        break;
      case SolverMethod::sor:
        for (Vertex v : interior) {
          values[v] += config.omega * (neighbor_mean(domain, values, v) - values[v]);
        }
        break;
    }
    ++result.iterations;
    result.final_residual = max_interior_residual(domain, values, interior);
  }
  result.converged = result.final_residual <= config.tolerance;
  result.field = ScalarField{std::move(values), 1.0};
  return result;
}

ScalarField exact_solve(const GraphDomain& domain, const BoundaryData& boundary) {
  check_preconditions(domain, boundary);

  const std::size_t n_vertices = domain.vertex_count();
  std::vector<std::size_t> unknown(n_vertices, kUnreachable);
  std::vector<Vertex> interior;
  for (Vertex v = 0; v < n_vertices; ++v) {
    if (!boundary.contains(v)) {
      unknown[v] = interior.size();
      interior.push_back(v);
    }
  }
  const std::size_t n = interior.size();
  if (n > kExactSolveMaxUnknowns) {
    throw InvalidInput("exact solve supports at most " + std::to_string(kExactSolveMaxUnknowns) +
                       " interior vertices, got " + std::to_string(n));
  }

  ScalarField field{std::vector<double>(n_vertices, 0.0), 1.0};
  for (const auto& [v, value] : boundary.entries()) field.values[v] = value;
  if (n == 0) return field;

  // Row i: deg(v) x_v - sum of interior neighbors = sum of boundary neighbors.
  std::vector<double> a(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  std::vector<std::size_t> row_end(n, 0);  // one past the last nonzero column
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = interior[i];
    a[i * n + i] = static_cast<double>(domain.degree(v));
    row_end[i] = i + 1;
    for (Vertex u : domain.neighbors(v)) {
      if (unknown[u] != kUnreachable) {
        a[i * n + unknown[u]] -= 1.0;
        row_end[i] = std::max(row_end[i], unknown[u] + 1);
      } else {
        rhs[i] += *boundary.value(u);
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) pivot = i;
    }
    if (a[pivot * n + k] == 0.0) {
      throw InternalError("singular Dirichlet system at column " + std::to_string(k));
    }
    if (pivot != k) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(k * n),
                       a.begin() + static_cast<std::ptrdiff_t>((k + 1) * n),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n));
      std::swap(rhs[k], rhs[pivot]);
      std::swap(row_end[k], row_end[pivot]);
    }
    const double diag = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = a[i * n + k] / diag;
      if (factor == 0.0) continue;
      for (std::size_t j = k; j < row_end[k]; ++j) a[i * n + j] -= factor * a[k * n + j];
      rhs[i] -= factor * rhs[k];
      row_end[i] = std::max(row_end[i], row_end[k]);
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double sum = rhs[k];
    for (std::size_t j = k + 1; j < row_end[k]; ++j) sum -= a[k * n + j] * x[j];
    x[k] = sum / a[k * n + k];
  }
  for (std::size_t i = 0; i < n; ++i) field.values[interior[i]] = x[i];
  return field;
}

ResidualReport residuals(const GraphDomain& domain, const ScalarField& field,
                         const BoundaryData& boundary) {
  if (field.size() != domain.vertex_count()) {
    throw InvalidInput("field has " + std::to_string(field.size()) + " values but the domain has " +
                       std::to_string(domain.vertex_count()) + " vertices");
  }
  boundary.validate(domain);
  ResidualReport report;
  for (Vertex v = 0; v < domain.vertex_count(); ++v) {
    if (boundary.contains(v) || domain.degree(v) == 0) continue;
    const double r = std::abs(field[v] - neighbor_mean(domain, field.values, v));
    report.residuals.emplace_back(v, r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

}  // namespace gradvar
