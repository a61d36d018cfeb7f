#include "gradvar/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace gradvar::analytic {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Point2 on_circle(const Ball& ball, double angle) {
  return {ball.center.x + ball.radius * std::cos(angle),
          ball.center.y + ball.radius * std::sin(angle)};
}

double pair_slope(const AnalyticFunction& fn, Point2 p, Point2 q) {
  return std::abs(evaluate(fn, p) - evaluate(fn, q)) / std::hypot(p.x - q.x, p.y - q.y);
}

// Largest |v[i] - v[i + t]| * inv_chord[t] for t >= 1 and one row i.
double row_max(const double* values, std::size_t i, std::size_t n, const double* inv_chord) {
  const double vi = values[i];
  const double* tail = values + i;
  const std::size_t count = n - i;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
  std::size_t t = 1;
  for (; t + 3 < count; t += 4) {
    const double s0 = std::abs(vi - tail[t]) * inv_chord[t];
    const double s1 = std::abs(vi - tail[t + 1]) * inv_chord[t + 1];
    const double s2 = std::abs(vi - tail[t + 2]) * inv_chord[t + 2];
    const double s3 = std::abs(vi - tail[t + 3]) * inv_chord[t + 3];
    m0 = s0 > m0 ? s0 : m0;
    m1 = s1 > m1 ? s1 : m1;
    m2 = s2 > m2 ? s2 : m2;
    m3 = s3 > m3 ? s3 : m3;
  }
  for (; t < count; ++t) {
    const double s = std::abs(vi - tail[t]) * inv_chord[t];
    m0 = s > m0 ? s : m0;
  }
  return std::max(std::max(m0, m1), std::max(m2, m3));
}

}  // namespace

double evaluate(const AnalyticFunction& fn, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Linear& f) { return f.a * p.x + f.b * p.y + f.c; },
                        [&](const Quadratic& f) {
                          return f.a * p.x * p.x + f.b * p.y * p.y + f.c * p.x * p.y;
                        },
                        [&](const Hyperbolic& f) { return f.a * (p.x * p.x - p.y * p.y); },
                    },
                    fn);
}

Gradient gradient(const AnalyticFunction& fn, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Linear& f) { return Gradient{f.a, f.b}; },
                        [&](const Quadratic& f) {
                          return Gradient{2.0 * f.a * p.x + f.c * p.y, 2.0 * f.b * p.y + f.c * p.x};
                        },
                        [&](const Hyperbolic& f) {
                          return Gradient{2.0 * f.a * p.x, -2.0 * f.a * p.y};
                        },
                    },
                    fn);
}

double gradient_magnitude(const AnalyticFunction& fn, Point2 p) {
  const auto g = gradient(fn, p);
  return std::hypot(g.dx, g.dy);
}

void validate(const AnalyticFunction& fn) {
  const bool finite = std::visit(
      Overloaded{
          [](const Linear& f) {
            return std::isfinite(f.a) && std::isfinite(f.b) && std::isfinite(f.c);
          },
          [](const Quadratic& f) {
            return std::isfinite(f.a) && std::isfinite(f.b) && std::isfinite(f.c);
          },
          [](const Hyperbolic& f) { return std::isfinite(f.a); },
      },
      fn);
  if (!finite) throw InvalidInput("analytic function coefficients must be finite");
}

void validate(const Ball& ball) {
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius)) {
    throw InvalidInput("ball radius must be positive and finite");
  }
  if (!std::isfinite(ball.center.x) || !std::isfinite(ball.center.y)) {
    throw InvalidInput("ball center must be finite");
  }
}

bool is_constant(const AnalyticFunction& fn) {
  return std::visit(Overloaded{
                        [](const Linear& f) { return f.a == 0.0 && f.b == 0.0; },
                        [](const Quadratic& f) { return f.a == 0.0 && f.b == 0.0 && f.c == 0.0; },
                        [](const Hyperbolic& f) { return f.a == 0.0; },
                    },
                    fn);
}

bool is_harmonic_quadratic(double a, double b, double /*c*/) { return std::abs(a + b) <= 1e-12; }

double max_gradient_on_ball(const AnalyticFunction& fn, const Ball& ball, std::size_t n_samples) {
  validate(fn);
  validate(ball);
  if (const auto* f = std::get_if<Linear>(&fn)) return std::hypot(f->a, f->b);
  if (const auto* f = std::get_if<Hyperbolic>(&fn); f && ball.origin_centered()) {
    return 2.0 * std::abs(f->a) * ball.radius;
  }
  if (n_samples < 4) throw InvalidInput("boundary sampling needs at least 4 points");
  double best = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(n_samples);
    best = std::max(best, gradient_magnitude(fn, on_circle(ball, angle)));
  }
  return best;
}

PairSlope designated_pair_slope(const AnalyticFunction& fn, const Ball& ball) {
  validate(fn);
  validate(ball);
  const double r = ball.radius;
  const double cx = ball.center.x;
  const double cy = ball.center.y;
  const Point2 pairs[3][2] = {
      {{cx - r, cy}, {cx + r, cy}},
      {{cx, cy + r}, {cx, cy - r}},
      {{cx, cy + r}, {cx + r, cy}},
  };
  PairSlope best{-1.0, {}, {}};
  for (const auto& pair : pairs) {
    const double s = pair_slope(fn, pair[0], pair[1]);
    if (s > best.slope) best = {s, pair[0], pair[1]};
  }
  return best;
}

PairSlope max_boundary_pair_slope(const AnalyticFunction& fn, const Ball& ball,
                                  std::size_t n_samples) {
  if (n_samples < 4) throw InvalidInput("boundary pair slope needs at least 4 samples");
  PairSlope best = designated_pair_slope(fn, ball);

  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_samples);
  std::vector<double> values(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    values[i] = evaluate(fn, on_circle(ball, step * static_cast<double>(i)));
  }
  // Chord between samples i and i + t has length 2 r sin(pi t / n).
  std::vector<double> inv_chord(n_samples, 0.0);
  for (std::size_t t = 1; t < n_samples; ++t) {
    inv_chord[t] = 1.0 / (2.0 * ball.radius * std::sin(0.5 * step * static_cast<double>(t)));
  }

  std::size_t best_row = n_samples;
  double best_sampled = best.slope;
  for (std::size_t i = 0; i + 1 < n_samples; ++i) {
    const double m = row_max(values.data(), i, n_samples, inv_chord.data());
    if (m > best_sampled) {
      best_sampled = m;
      best_row = i;
    }
  }
  if (best_row == n_samples) return best;

  for (std::size_t t = 1; best_row + t < n_samples; ++t) {
    const double s = std::abs(values[best_row] - values[best_row + t]) * inv_chord[t];
    if (s == best_sampled) {
      return {s, on_circle(ball, step * static_cast<double>(best_row)),
              on_circle(ball, step * static_cast<double>(best_row + t))};
    }
  }
  throw InternalError("sampled pair maximum not found on its row");
}

namespace {

Prop2Ratio make_ratio(const AnalyticFunction& fn, const Ball& ball, PairSlope pair) {
  if (is_constant(fn) || pair.slope == 0.0) {
    throw InvalidInput("ratio is undefined for a constant function");
  }
  Prop2Ratio out;
  out.max_gradient = max_gradient_on_ball(fn, ball);
  out.max_pair_slope = pair.slope;
  out.ratio = out.max_gradient / out.max_pair_slope;
  out.witness = pair;
  return out;
}

}  // namespace

Prop2Ratio prop2_ratio_designated(const AnalyticFunction& fn, const Ball& ball) {
  return make_ratio(fn, ball, designated_pair_slope(fn, ball));
}

Prop2Ratio prop2_ratio(const AnalyticFunction& fn, const Ball& ball, std::size_t n_samples) {
  return make_ratio(fn, ball, max_boundary_pair_slope(fn, ball, n_samples));
}

PlaneNormalization normalize_plane(double a, double b, double c, double d) {
  const double coef[3] = {a, b, c};
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw InvalidInput("plane needs at least one nonzero coefficient among a, b, c");
  }
  std::size_t solved = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(coef[i]) > std::abs(coef[solved])) solved = i;
  }
  const std::size_t first = solved == 0 ? 1 : 0;
  const std::size_t second = solved == 2 ? 1 : 2;
  // Adding 0.0 turns -0.0 into +0.0.
  const auto solve_for = [&](double value) { return -value / coef[solved] + 0.0; };
  return PlaneNormalization{static_cast<Axis>(solved),   static_cast<Axis>(first),
                            static_cast<Axis>(second),   solve_for(coef[first]),
                            solve_for(coef[second]),     solve_for(d)};
}

double k_norm_gradient(const AnalyticFunction& fn, Point2 p, double k) {
  if (!(k > 0.0)) throw InvalidInput("k must be positive");
  const auto g = gradient(fn, p);
  return std::pow(std::pow(std::abs(g.dx), k) + std::pow(std::abs(g.dy), k), 1.0 / k);
}

}  // namespace gradvar::analytic
