#include "gradvar/cases.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "gradvar/analysis.hpp"
#include "gradvar/analytic.hpp"
#include "gradvar/gvf.hpp"
#include "gradvar/harmonic.hpp"

namespace gradvar::cases {
namespace {

using Rng = std::mt19937_64;

// Platform-independent draws; the std distributions are not.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }
long uniform_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

constexpr double kSqrt2 = std::numbers::sqrt2;

std::string format_number(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

// --- star K_{1,4}: the five-point cross ------------------------------------

struct Cross {
  GridGraph graph;
  Vertex center = 0;
  // Left, right, up, down neighbors of the center.
  std::vector<Vertex> leaves;
};

Cross make_cross() {
  const auto grid = build_grid(3, 3, std::vector<bool>{false, true, false,  //
                                                        true, true, true,    //
                                                        false, true, false});
  Cross cross{to_graph(grid), 0, {}};
  cross.center = *cross.graph.vertex_at(1, 1);
  cross.leaves = {*cross.graph.vertex_at(1, 0), *cross.graph.vertex_at(1, 2),
                  *cross.graph.vertex_at(0, 1), *cross.graph.vertex_at(2, 1)};
  return cross;
}

BoundaryData cross_boundary(const Cross& cross, double first, double rest) {
  BoundaryData boundary;
  boundary.set(cross.leaves[0], first);
  for (std::size_t i = 1; i < cross.leaves.size(); ++i) boundary.set(cross.leaves[i], rest);
  return boundary;
}

void run_cross(CaseReport& report, double first, double rest, double harmonic_center) {
  const auto cross = make_cross();
  const auto& graph = cross.graph.graph;
  const auto boundary = cross_boundary(cross, first, rest);
  const auto anchors = boundary.vertices();

  const auto exact = exact_solve(graph, boundary);
  const auto iterative = solve_dirichlet(graph, boundary, SolverConfig{});
  const auto lower = lower_envelope(graph, boundary, 1.0);
  const auto upper = upper_envelope(graph, boundary, 1.0);
  const auto midpoint = extend_gvf(graph, boundary, 1.0, ExtensionMode::midpoint);

  report.values["harmonic_center_exact"] = exact[cross.center];
  report.values["harmonic_center_gauss_seidel"] = iterative.field[cross.center];
  report.values["gvf_lower_center"] = lower[cross.center];
  report.values["gvf_upper_center"] = upper[cross.center];
  report.values["gvf_midpoint_center"] = midpoint[cross.center];

  report.check("harmonic center (exact solve)", Relation::equal, harmonic_center,
               exact[cross.center], 1e-9);
  report.check("harmonic center (Gauss-Seidel)", Relation::equal, harmonic_center,
               iterative.field[cross.center], 1e-8);
  report.check("GVF lower envelope center", Relation::equal, 2.0, lower[cross.center]);
  report.check("GVF upper envelope center", Relation::equal, 2.0, upper[cross.center]);
  report.check("GVF midpoint center", Relation::equal, 2.0, midpoint[cross.center]);

  const auto harmonic_diff = max_adjacent_difference(graph, exact).difference;
  const auto harmonic_ratio = semi_preserving_ratio(graph, exact, anchors);
  const auto gvf_ratio = semi_preserving_ratio(graph, lower, anchors);
  const auto gvf_residual = residuals(graph, lower, boundary).max_residual;
  report.values["harmonic_max_adjacent_difference"] = harmonic_diff;
  report.values["harmonic_semi_preserving_ratio"] = harmonic_ratio.ratio.value_or(0.0);
  report.values["gvf_semi_preserving_ratio"] = gvf_ratio.ratio.value_or(0.0);
  report.values["gvf_center_residual"] = gvf_residual;
  report.values["harmonic_gvf_violations"] =
      static_cast<double>(check_gvf(graph, exact).violations.size());

  report.check("harmonic max adjacent difference", Relation::equal, 1.5, harmonic_diff, 1e-12);
  report.check("harmonic semi-preserving ratio", Relation::equal, 1.5,
               harmonic_ratio.ratio.value_or(NAN), 1e-12);
  report.check("harmonic semi-preserving ratio below 2", Relation::less_than, 2.0,
               harmonic_ratio.ratio.value_or(NAN));
  report.check("GVF semi-preserving ratio", Relation::equal, 1.0, gvf_ratio.ratio.value_or(NAN),
               1e-12);
  report.check("GVF center residual", Relation::equal, 0.5, gvf_residual, 1e-12);
  report.check("harmonic field violates gradual variation on one edge", Relation::equal, 1.0,
               report.values["harmonic_gvf_violations"]);
}

CaseReport cross_lemma1() {
  CaseReport report;
  report.case_name = "cross-lemma1";
  report.inputs = "five-point cross, leaves (1, 3, 3, 3), level step 1";
  run_cross(report, 1.0, 3.0, 2.5);
  return report;
}

CaseReport cross_mirror() {
  CaseReport report;
  report.case_name = "cross-mirror";
  report.inputs = "five-point cross, leaves (3, 1, 1, 1), level step 1";
  run_cross(report, 3.0, 1.0, 1.5);
  return report;
}

// --- triangle with f = x + 3y ----------------------------------------------

CaseReport triangle_example1() {
  using analytic::Linear;
  using analytic::Point2;
  CaseReport report;
  report.case_name = "triangle-example1";
  report.inputs = "triangle (0,0), (9,0), (-8,4); f(x, y) = x + 3y";

  const analytic::AnalyticFunction f = Linear{1.0, 3.0, 0.0};
  const Point2 p1{0.0, 0.0};
  const Point2 p2{9.0, 0.0};
  const Point2 p3{-8.0, 4.0};
  const auto distance = [](Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); };
  const auto rise = [&](Point2 a, Point2 b) {
    return std::abs(analytic::evaluate(f, a) - analytic::evaluate(f, b));
  };

  report.values["|f(p1)-f(p2)|"] = rise(p1, p2);
  report.values["|p1-p2|"] = distance(p1, p2);
  report.values["|f(p2)-f(p3)|"] = rise(p2, p3);
  report.values["|p2-p3|"] = distance(p2, p3);
  report.values["|f(p1)-f(p3)|"] = rise(p1, p3);
  report.values["|p1-p3|"] = distance(p1, p3);
  report.check("|f(p1)-f(p2)| = 9", Relation::equal, 9.0, rise(p1, p2));
  report.check("|f(p1)-f(p2)| <= |p1-p2|", Relation::at_most, distance(p1, p2), rise(p1, p2),
               1e-12);
  report.check("|f(p2)-f(p3)| = 5", Relation::equal, 5.0, rise(p2, p3));
  report.check("|p2-p3| = sqrt(305)", Relation::equal, std::sqrt(305.0), distance(p2, p3), 1e-12);
  report.check("|f(p2)-f(p3)| <= |p2-p3|", Relation::at_most, distance(p2, p3), rise(p2, p3),
               1e-12);
  report.check("|f(p1)-f(p3)| = 4", Relation::equal, 4.0, rise(p1, p3));
  report.check("|p1-p3| = sqrt(80)", Relation::equal, std::sqrt(80.0), distance(p1, p3), 1e-12);
  report.check("|f(p1)-f(p3)| <= |p1-p3|", Relation::at_most, distance(p1, p3), rise(p1, p3),
               1e-12);

  // Point on segment p2 p3 with x = 0.
  const double t = (p2.x - 0.0) / (p2.x - p3.x);
  const Point2 p{0.0, p2.y + t * (p3.y - p2.y)};
  const double fp = analytic::evaluate(f, p);
  const double violation = rise(p, p1) / distance(p, p1);
  report.values["p.y"] = p.y;
  report.values["f(p)"] = fp;
  report.values["|f(p)-f(p1)| / |p-p1|"] = violation;
  report.check("p.y = 36/17", Relation::equal, 36.0 / 17.0, p.y, 1e-12);
  report.check("f(p) = 108/17", Relation::equal, 108.0 / 17.0, fp, 1e-12);
  report.check("|f(p)-f(p1)| / |p-p1| = 3", Relation::equal, 3.0, violation, 1e-12);
  report.check("gradual variation fails between p and p1", Relation::greater_than, 1.0, violation);
  report.notes.push_back(
      "36/17 is about 2.1176 and f(p) = 108/17 is about 6.3529; the violation |f(p)-f(p1)| > "
      "|p-p1| holds with ratio exactly 3.");
  return report;
}

// --- balls and the sqrt(2) bound --------------------------------------------

CaseReport prop2_linear() {
  CaseReport report;
  report.case_name = "prop2-linear";
  report.seed = kProp2Seed;
  report.inputs = "1000 random u = ax + by + c, a, b, c in [-10, 10], center in [-5, 5]^2, "
                  "radius in (0, 10]";
  Rng rng(kProp2Seed);
  double worst = 0.0;
  double best = INFINITY;
  std::size_t instances = 0;
  while (instances < 1000) {
    const analytic::Linear fn{uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10)};
    const analytic::Ball ball{{uniform(rng, -5, 5), uniform(rng, -5, 5)},
                              10.0 * (1.0 - uniform01(rng))};
    if (analytic::is_constant(fn)) continue;
    const auto ratio = analytic::prop2_ratio_designated(fn, ball).ratio;
    worst = std::max(worst, ratio);
    best = std::min(best, ratio);
    ++instances;
  }
  report.values["instances"] = static_cast<double>(instances);
  report.values["max_ratio"] = worst;
  report.values["min_ratio"] = best;
  report.check("max ratio <= sqrt(2)", Relation::at_most, kSqrt2, worst, 1e-9);
  return report;
}

CaseReport prop2_hyperbolic() {
  CaseReport report;
  report.case_name = "prop2-hyperbolic";
  report.seed = kProp2Seed;
  report.inputs = "1000 random u = a(x^2 - y^2), a in [-10, 10] \\ {0}, origin-centered ball, "
                  "radius in (0, 10]";
  Rng rng(kProp2Seed ^ 0x68797065ULL);
  double worst = 0.0;
  double max_error = 0.0;
  std::size_t instances = 0;
  while (instances < 1000) {
    const analytic::Hyperbolic fn{uniform(rng, -10, 10)};
    const analytic::Ball ball{{0.0, 0.0}, 10.0 * (1.0 - uniform01(rng))};
    if (analytic::is_constant(fn)) continue;
    const auto ratio = analytic::prop2_ratio_designated(fn, ball).ratio;
    worst = std::max(worst, ratio);
    max_error = std::max(max_error, std::abs(ratio - kSqrt2));
    ++instances;
  }
  report.values["instances"] = static_cast<double>(instances);
  report.values["max_ratio"] = worst;
  report.values["max_abs_error_from_sqrt2"] = max_error;
  report.check("max ratio <= sqrt(2)", Relation::at_most, kSqrt2, worst, 1e-9);
  report.check("every ratio equals sqrt(2)", Relation::equal, 0.0, max_error, 1e-9);
  report.notes.push_back(
      "The quarter chord (0,r)-(r,0) has slope |-a r^2 - a r^2| / (r sqrt 2) = sqrt(2)|a|r, not "
      "2|a|r; with max |grad u| = 2|a|r the ratio is exactly sqrt(2), so the bound is tight for "
      "this pair.");
  return report;
}

CaseReport plane_normalize() {
  CaseReport report;
  report.case_name = "plane-normalize";
  report.inputs = "plane x + 3y - z = 0";
  const auto plane = analytic::normalize_plane(1.0, 3.0, -1.0, 0.0);
  report.values["solved_axis"] = static_cast<double>(plane.solved);
  report.values["A"] = plane.first;
  report.values["B"] = plane.second;
  report.values["D"] = plane.constant;
  report.check("solves for y", Relation::equal, static_cast<double>(analytic::Axis::y),
               static_cast<double>(plane.solved));
  report.check("coefficient of x", Relation::equal, -1.0 / 3.0, plane.first, 1e-15);
  report.check("coefficient of z", Relation::equal, 1.0 / 3.0, plane.second, 1e-15);
  report.check("constant", Relation::equal, 0.0, plane.constant);
  report.check("|A| <= 1", Relation::at_most, 1.0, std::abs(plane.first));
  report.check("|B| <= 1", Relation::at_most, 1.0, std::abs(plane.second));
  return report;
}

CaseReport piecewise_linear_bound() {
  CaseReport report;
  report.case_name = "piecewise-linear-bound";
  report.seed = kPiecewiseSeed;
  report.inputs = "1000 random f = ax + by with |a|, |b| <= 1 on the unit disk";
  Rng rng(kPiecewiseSeed);
  double max_gradient = 0.0;
  double worst_factor_gap = -INFINITY;  // sqrt(a^2+b^2) - sqrt(2) max(|a|,|b|)
  double worst_axis_gap = -INFINITY;    // max(|a|,|b|) - designated pair slope
  double worst_chord_gap = -INFINITY;   // designated pair slope - sqrt(a^2+b^2)
  const analytic::Ball unit{{0.0, 0.0}, 1.0};
  for (int i = 0; i < 1000; ++i) {
    const double a = uniform(rng, -1, 1);
    const double b = uniform(rng, -1, 1);
    const analytic::AnalyticFunction fn = analytic::Linear{a, b, 0.0};
    const double grad = analytic::max_gradient_on_ball(fn, unit);
    const double pair = analytic::designated_pair_slope(fn, unit).slope;
    const double axis = std::max(std::abs(a), std::abs(b));
    max_gradient = std::max(max_gradient, grad);
    worst_factor_gap = std::max(worst_factor_gap, grad - kSqrt2 * axis);
    worst_axis_gap = std::max(worst_axis_gap, axis - pair);
    worst_chord_gap = std::max(worst_chord_gap, pair - grad);
  }
  report.values["max_gradient"] = max_gradient;
  report.values["max_gradient_minus_sqrt2_axis"] = worst_factor_gap;
  report.check("sqrt(a^2+b^2) <= sqrt(2)", Relation::at_most, kSqrt2, max_gradient, 1e-12);
  report.check("sqrt(a^2+b^2) <= 2", Relation::at_most, 2.0, max_gradient);
  report.check("sqrt(a^2+b^2) <= sqrt(2) max(|a|,|b|)", Relation::at_most, 0.0, worst_factor_gap,
               1e-12);
  report.check("boundary slope >= max(|a|,|b|)", Relation::at_most, 0.0, worst_axis_gap, 1e-12);
  report.check("boundary slope <= sqrt(a^2+b^2)", Relation::at_most, 0.0, worst_chord_gap, 1e-12);
  return report;
}

// --- the grid suite ----------------------------------------------------------

std::vector<bool> full_mask(std::size_t w, std::size_t h) { return std::vector<bool>(w * h, true); }

std::vector<bool> mask_where(std::size_t w, std::size_t h,
                             const std::function<bool(std::size_t, std::size_t)>& inside) {
  std::vector<bool> mask(w * h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) mask[r * w + c] = inside(r, c);
  }
  return mask;
}

// Integer 1-Lipschitz field: anchors placed one at a time, each drawn inside
// the envelope interval of the anchors before it, then extended by midpoint.
ScalarField random_gvf(const GraphDomain& graph, Rng& rng, std::size_t anchors, long max_level) {
  BoundaryData data;
  for (std::size_t i = 0; i < anchors; ++i) {
    const Vertex v = static_cast<Vertex>(uniform_int(rng, 0, static_cast<long>(graph.vertex_count()) - 1));
    if (data.contains(v)) continue;
    long lo = 0;
    long hi = max_level;
    const auto dist = bfs_distances(graph, v);
    for (const auto& [q, value] : data.entries()) {
      if (dist[q] == kUnreachable) continue;
      lo = std::max(lo, static_cast<long>(value) - static_cast<long>(dist[q]));
      hi = std::min(hi, static_cast<long>(value) + static_cast<long>(dist[q]));
    }
    data.set(v, static_cast<double>(uniform_int(rng, lo, hi)));
  }
  // Components the anchors missed get a constant level.
  for (const auto& component : connected_components(graph)) {
    const bool hit = std::any_of(component.begin(), component.end(),
                                 [&](Vertex v) { return data.contains(v); });
    if (!hit) data.set(component.front(), static_cast<double>(uniform_int(rng, 0, max_level)));
  }
  return extend_gvf(graph, data, 1.0, ExtensionMode::midpoint);
}

SuiteProblem make_problem(std::string name, GridDomain grid,
                          const std::function<ScalarField(const GridGraph&)>& field) {
  auto graph = to_graph(grid);
  const auto values = field(graph);
  BoundaryData boundary;
  for (Vertex v : grid_boundary_vertices(graph)) boundary.set(v, values[v]);
  return SuiteProblem{std::move(name), std::move(grid), std::move(graph), std::move(boundary)};
}

ScalarField rounded_linear(const GridGraph& graph, double alpha, double beta, double offset) {
  ScalarField field{std::vector<double>(graph.vertex_to_cell.size()), 1.0};
  for (Vertex v = 0; v < field.values.size(); ++v) {
    const auto [r, c] = graph.vertex_to_cell[v];
    field.values[v] = std::floor(alpha * static_cast<double>(c) + beta * static_cast<double>(r) +
                                 offset + 0.5);
  }
  return field;
}

std::string describe_boundary(const SuiteProblem& problem) {
  return problem.name + ": " + std::to_string(problem.grid.width()) + "x" +
         std::to_string(problem.grid.height()) + " grid, " +
         std::to_string(problem.graph.vertex_to_cell.size()) + " inside cells, " +
         std::to_string(problem.boundary.size()) + " boundary values";
}

CaseReport observation_a() {
  CaseReport report;
  report.case_name = "observationA-grid";
  report.seed = kSuiteSeed;
  report.inputs = "8 canned Dirichlet problems on masked grids up to 32x32, integer 1-Lipschitz "
                  "data on cells with fewer than four inside neighbors; exact harmonic solve";
  double worst = 0.0;
  const double ks[] = {1.0, 2.0};
  for (const auto& problem : observation_suite()) {
    report.notes.push_back(describe_boundary(problem));
    const auto& graph = problem.graph.graph;
    const auto field = exact_solve(graph, problem.boundary);
    const auto anchors = problem.boundary.vertices();
    const auto result = semi_preserving_ratio(graph, field, anchors);
    const double ratio = result.ratio.value_or(0.0);
    worst = std::max(worst, ratio);
    report.values[problem.name + ".ratio"] = ratio;
    report.values[problem.name + ".max_adjacent_difference"] = result.numerator;
    report.values[problem.name + ".max_boundary_slope"] = result.denominator;
    for (const auto& entry : k_norm_slope_report(problem.graph, field, anchors, ks)) {
      report.values[problem.name + ".k" + format_number(entry.k) + "_ratio"] =
          entry.ratio.value_or(0.0);
    }
    report.check(problem.name + " semi-preserving ratio < 2", Relation::less_than, 2.0,
                 result.ratio.value_or(NAN));
  }
  report.values["max_ratio"] = worst;
  return report;
}

CaseReport observation_b() {
  CaseReport report;
  report.case_name = "observationB-gvf";
  report.seed = kSuiteSeed;
  report.inputs = "the observationA-grid suite, extended by the GVF lower envelope";
  double worst = 0.0;
  for (const auto& problem : observation_suite()) {
    report.notes.push_back(describe_boundary(problem));
    const auto& graph = problem.graph.graph;
    const auto field = lower_envelope(graph, problem.boundary, 1.0);
    const auto res = residuals(graph, field, problem.boundary);
    worst = std::max(worst, res.max_residual);
    report.values[problem.name + ".max_residual"] = res.max_residual;
    report.values[problem.name + ".gvf_violations"] =
        static_cast<double>(check_gvf(graph, field).violations.size());
    report.check(problem.name + " max residual < 1", Relation::less_than, 1.0, res.max_residual);
  }
  report.values["max_residual"] = worst;
  return report;
}

using Runner = CaseReport (*)();

const std::vector<std::pair<std::string, Runner>>& catalog() {
  static const std::vector<std::pair<std::string, Runner>> entries = {
      {"cross-lemma1", &cross_lemma1},
      {"cross-mirror", &cross_mirror},
      {"triangle-example1", &triangle_example1},
      {"prop2-linear", &prop2_linear},
      {"prop2-hyperbolic", &prop2_hyperbolic},
      {"plane-normalize", &plane_normalize},
      {"piecewise-linear-bound", &piecewise_linear_bound},
      {"observationA-grid", &observation_a},
      {"observationB-gvf", &observation_b},
  };
  return entries;
}

}  // namespace

bool CaseReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.passed; });
}

void CaseReport::check(std::string name, Relation relation, double expected, double actual,
                       double tolerance) {
  bool ok = false;
  switch (relation) {
    case Relation::equal:
      ok = std::abs(actual - expected) <= tolerance;
      break;
    case Relation::at_most:
      ok = actual <= expected + tolerance;
      break;
    case Relation::less_than:
      ok = actual < expected;
      break;
    case Relation::greater_than:
      ok = actual > expected;
      break;
  }
  assertions.push_back({std::move(name), relation, expected, actual, tolerance, ok});
}

const std::vector<std::string>& list_cases() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : catalog()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

CaseReport run_case(const std::string& name) {
  for (const auto& [entry_name, runner] : catalog()) {
    if (entry_name == name) return runner();
  }
  throw InvalidInput("unknown case '" + name + "'");
}

std::vector<Vertex> grid_boundary_vertices(const GridGraph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.graph.vertex_count(); ++v) {
    if (graph.graph.degree(v) < 4) out.push_back(v);
  }
  return out;
}

std::vector<SuiteProblem> observation_suite() {
  Rng rng(kSuiteSeed);
  std::vector<SuiteProblem> suite;

  suite.push_back(make_problem("ramp-16", build_grid(16, 16), [](const GridGraph& g) {
    return rounded_linear(g, 0.6, 0.3, 0.0);
  }));

  suite.push_back(make_problem("gvf-32", build_grid(32, 32, full_mask(32, 32)),
                               [&](const GridGraph& g) { return random_gvf(g.graph, rng, 12, 10); }));

  suite.push_back(make_problem(
      "lshape-24",
      build_grid(24, 24, mask_where(24, 24, [](std::size_t r, std::size_t c) { return r >= 12 || c < 12; })),
      [&](const GridGraph& g) { return random_gvf(g.graph, rng, 8, 8); }));

  suite.push_back(make_problem(
      "annulus-21",
      build_grid(21, 21, mask_where(21, 21,
                                    [](std::size_t r, std::size_t c) {
                                      return !(r >= 7 && r <= 13 && c >= 7 && c <= 13);
                                    })),
      [&](const GridGraph& g) { return random_gvf(g.graph, rng, 8, 8); }));

  suite.push_back(make_problem(
      "plus-21",
      build_grid(21, 21, mask_where(21, 21,
                                    [](std::size_t r, std::size_t c) {
                                      return (r >= 7 && r <= 13) || (c >= 7 && c <= 13);
                                    })),
      [](const GridGraph& g) { return rounded_linear(g, 0.5, -0.4, 10.0); }));

  {
    std::vector<bool> mask(32 * 32, false);
    for (int k = 0; k < 6; ++k) {
      const auto w = static_cast<std::size_t>(uniform_int(rng, 6, 16));
      const auto h = static_cast<std::size_t>(uniform_int(rng, 6, 16));
      const auto r0 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(32 - h)));
      const auto c0 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(32 - w)));
      for (std::size_t r = r0; r < r0 + h; ++r) {
        for (std::size_t c = c0; c < c0 + w; ++c) mask[r * 32 + c] = true;
      }
    }
    suite.push_back(make_problem("blob-32", build_grid(32, 32, mask),
                                 [&](const GridGraph& g) { return random_gvf(g.graph, rng, 10, 10); }));
  }

  suite.push_back(make_problem(
      "comb-20",
      build_grid(20, 20, mask_where(20, 20,
                                    [](std::size_t r, std::size_t c) { return r < 6 || c % 4 < 2; })),
      [&](const GridGraph& g) { return random_gvf(g.graph, rng, 8, 8); }));

  {
    const auto cross = make_cross();
    SuiteProblem problem{"cross-3",
                         build_grid(3, 3, std::vector<bool>{false, true, false, true, true, true,
                                                            false, true, false}),
                         cross.graph, cross_boundary(cross, 1.0, 3.0)};
    suite.push_back(std::move(problem));
  }
  return suite;
}

}  // namespace gradvar::cases
