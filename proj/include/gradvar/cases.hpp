#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradvar/domain.hpp"

namespace gradvar::cases {

enum class Relation { equal, at_most, less_than, greater_than };

struct Assertion {
  std::string name;
  Relation relation = Relation::equal;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CaseReport {
  std::string case_name;
  std::string inputs;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> values;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;

  bool passed() const;

  /// equal: |actual - expected| <= tolerance
  /// at_most: actual <= expected + tolerance
  /// less_than: actual < expected
  /// greater_than: actual > expected
  void check(std::string name, Relation relation, double expected, double actual,
             double tolerance = 0.0);
};

/// Fixed catalog of scenario names, in report order.
const std::vector<std::string>& list_cases();

/// Runs one named scenario. Throws InvalidInput for unknown names.
CaseReport run_case(const std::string& name);

/// One Dirichlet problem of the near-gradual-variation suite: a masked grid,
/// its graph, and integer 1-Lipschitz data on the cells with fewer than four
/// inside neighbors.
struct SuiteProblem {
  std::string name;
  GridDomain grid;
  GridGraph graph;
  BoundaryData boundary;
};

inline constexpr std::uint64_t kSuiteSeed = 0x6776665f73756974ULL;
inline constexpr std::uint64_t kProp2Seed = 0x70726f7032626e64ULL;
inline constexpr std::uint64_t kPiecewiseSeed = 0x70776c696e656172ULL;

/// The eight canned problems shared by the observation cases.
std::vector<SuiteProblem> observation_suite();

/// Vertices with fewer than four inside 4-neighbors.
std::vector<Vertex> grid_boundary_vertices(const GridGraph& graph);

}  // namespace gradvar::cases
