#pragma once

#include <cstddef>
#include <variant>

#include "gradvar/error.hpp"

namespace gradvar::analytic {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Gradient {
  double dx = 0.0;
  double dy = 0.0;
};

/// a x + b y + c
struct Linear {
  double a = 0.0, b = 0.0, c = 0.0;
};

/// a x^2 + b y^2 + c x y
struct Quadratic {
  double a = 0.0, b = 0.0, c = 0.0;
};

/// a (x^2 - y^2)
struct Hyperbolic {
  double a = 0.0;
};

using AnalyticFunction = std::variant<Linear, Quadratic, Hyperbolic>;

struct Ball {
  Point2 center;
  double radius = 1.0;

  bool origin_centered() const { return center.x == 0.0 && center.y == 0.0; }
};

double evaluate(const AnalyticFunction& fn, Point2 p);
Gradient gradient(const AnalyticFunction& fn, Point2 p);
double gradient_magnitude(const AnalyticFunction& fn, Point2 p);

/// Throws InvalidInput on non-finite coefficients.
void validate(const AnalyticFunction& fn);
void validate(const Ball& ball);

/// True iff the function is constant (zero gradient everywhere).
bool is_constant(const AnalyticFunction& fn);

/// a x^2 + b y^2 + c x y has Laplacian 2a + 2b; harmonic iff a = -b.
bool is_harmonic_quadratic(double a, double b, double c);

/// Boundary samples used when no closed form applies.
inline constexpr std::size_t kDefaultBoundarySamples = 3600;

/// max over the closed ball of |grad u|. Closed forms: sqrt(a^2 + b^2) for
/// linear, 2|a|r for hyperbolic on an origin-centered ball. Otherwise |grad u|
/// is the norm of an affine map, hence convex, and its maximum is taken over
/// `n_samples` equally spaced boundary points.
double max_gradient_on_ball(const AnalyticFunction& fn, const Ball& ball,
                            std::size_t n_samples = kDefaultBoundarySamples);

struct PairSlope {
  double slope = 0.0;
  Point2 p;
  Point2 q;
};

/// Best of the fixed chord pairs: horizontal diameter, vertical diameter, and
/// the quarter chord from (0, r) to (r, 0), all relative to the center.
PairSlope designated_pair_slope(const AnalyticFunction& fn, const Ball& ball);

/// max |u(p) - u(q)| / |p - q| over all pairs of `n_samples` equally spaced
/// boundary points (angle 2 pi i / n) together with the designated pairs.
/// Throws InvalidInput when n_samples < 4.
PairSlope max_boundary_pair_slope(const AnalyticFunction& fn, const Ball& ball,
                                  std::size_t n_samples);

struct Prop2Ratio {
  double max_gradient = 0.0;
  double max_pair_slope = 0.0;
  double ratio = 0.0;
  PairSlope witness;
};

/// Gradient bound against designated pairs only (the closed-form route).
/// Throws InvalidInput for constant functions.
Prop2Ratio prop2_ratio_designated(const AnalyticFunction& fn, const Ball& ball);

/// Same ratio with the pair slope maximized over sampled boundary pairs.
Prop2Ratio prop2_ratio(const AnalyticFunction& fn, const Ball& ball, std::size_t n_samples);

enum class Axis { x, y, z };

/// a x + b y + c z + d = 0 rewritten as
/// solved = first * (first other axis) + second * (second other axis) + constant,
/// solving for the axis with the largest |coefficient| (ties go to x, then y).
struct PlaneNormalization {
  Axis solved = Axis::x;
  Axis first_axis = Axis::y;
  Axis second_axis = Axis::z;
  double first = 0.0;
  double second = 0.0;
  double constant = 0.0;
};

PlaneNormalization normalize_plane(double a, double b, double c, double d);

/// (|du/dx|^k + |du/dy|^k)^(1/k). Throws InvalidInput when k <= 0.
double k_norm_gradient(const AnalyticFunction& fn, Point2 p, double k);

}  // namespace gradvar::analytic
