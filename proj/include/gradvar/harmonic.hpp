#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gradvar/domain.hpp"
#include "gradvar/gvf.hpp"

namespace gradvar {

enum class SolverMethod { jacobi, gauss_seidel, sor };

struct SolverConfig {
  SolverMethod method = SolverMethod::gauss_seidel;
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  /// Relaxation factor, used by SolverMethod::sor only.
  double omega = 1.5;

  void validate() const;
};

struct SolveResult {
  ScalarField field;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
};

/// Iterative solve of the discrete Dirichlet problem: every non-boundary
/// vertex takes the mean of its neighbors, boundary values stay fixed.
///
/// The interior starts at the mean of the boundary values. Sweeps visit
/// vertices in ascending index order and stop once the max-norm interior
/// residual is at most `config.tolerance` or the iteration budget runs out.
SolveResult solve_dirichlet(const GraphDomain& domain, const BoundaryData& boundary,
                            const SolverConfig& config = {});

/// Largest interior system exact_solve accepts.
inline constexpr std::size_t kExactSolveMaxUnknowns = 10000;

/// Direct solve of the same system by dense Gaussian elimination with partial
/// pivoting. Intended as the reference for the iterative schemes.
ScalarField exact_solve(const GraphDomain& domain, const BoundaryData& boundary);

struct ResidualReport {
  /// (vertex, |f(v) - mean of neighbors|) for every non-boundary vertex with
  /// at least one neighbor, ascending by vertex.
  std::vector<std::pair<Vertex, double>> residuals;
  double max_residual = 0.0;
};

ResidualReport residuals(const GraphDomain& domain, const ScalarField& field,
                         const BoundaryData& boundary);

}  // namespace gradvar
