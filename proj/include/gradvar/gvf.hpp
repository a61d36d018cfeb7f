#pragma once

#include <optional>
#include <vector>

#include "gradvar/domain.hpp"

namespace gradvar {

/// Absolute slack used when comparing real-valued differences against the
/// level step. Integer-level data compares exactly under it.
inline constexpr double kLevelTolerance = 1e-12;

/// One real value per domain vertex. Gradual variation is judged against
/// `level_step`, the spacing of the level lattice (A_i = i * level_step).
struct ScalarField {
  std::vector<double> values;
  double level_step = 1.0;

  std::size_t size() const { return values.size(); }
  double operator[](Vertex v) const { return values[v]; }
};

struct EdgeViolation {
  Vertex u = 0;
  Vertex v = 0;
  double difference = 0.0;
};

struct ViolationReport {
  std::vector<EdgeViolation> violations;
  double max_adjacent_difference = 0.0;

  bool gradually_varied() const { return violations.empty(); }
};

/// Lists every edge whose endpoint values differ by more than the level step.
ViolationReport check_gvf(const GraphDomain& domain, const ScalarField& field);

struct FeasibilityWitness {
  Vertex p = 0;
  Vertex q = 0;
  double difference = 0.0;
  std::size_t distance = 0;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<FeasibilityWitness> witness;
};

/// Boundary data admits a gradually varied extension iff every anchored pair in
/// a common component satisfies |f(p) - f(q)| <= step * d(p, q). The witness is
/// the first failing pair (p < q) in lexicographic order.
FeasibilityReport check_feasibility(const GraphDomain& domain, const BoundaryData& boundary,
                                    double level_step);

/// Raised by the extension operations when the boundary data has no
/// gradually varied extension.
class InfeasibleBoundary : public Error {
 public:
  explicit InfeasibleBoundary(FeasibilityWitness witness);
  const FeasibilityWitness& witness() const { return witness_; }

 private:
  FeasibilityWitness witness_;
};

/// Smallest gradually varied extension: L(v) = max_q f(q) - step * d(v, q).
ScalarField lower_envelope(const GraphDomain& domain, const BoundaryData& boundary,
                           double level_step);

/// Largest gradually varied extension: U(v) = min_q f(q) + step * d(v, q).
ScalarField upper_envelope(const GraphDomain& domain, const BoundaryData& boundary,
                           double level_step);

enum class ExtensionMode { lower, upper, midpoint };

/// Gradually varied extension of `boundary`. Midpoint mode rounds (L + U) / 2
/// half-up onto the level lattice and requires anchors on that lattice.
ScalarField extend_gvf(const GraphDomain& domain, const BoundaryData& boundary, double level_step,
                       ExtensionMode mode = ExtensionMode::lower);

}  // namespace gradvar
