// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force checks that know nothing about the closed forms: algebraic conic
// fitting, discriminant classification, numeric envelopes and quadrature.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/curve.hpp"

namespace ellipse_loci {

struct FitReport {
  Conic conic;        // unit coefficient vector, a20 ≥ 0
  double residual;    // σ_min / √N in normalized coordinates
  double condition;   // σ5 / σ1; near zero means a pencil of solutions
  bool rank_deficient = false;
};

struct PointNormalization {
  Point centroid;
  double scale;  // rms radius maps to √2
};

inline PointNormalization normalize_points(std::span<const Point> pts) {
  Point m{};
  for (const Point& p : pts) m += p;
  m = m / static_cast<double>(pts.size());
  double ss = 0.0;
  for (const Point& p : pts) ss += dot(p - m, p - m);
  const double rms = std::sqrt(ss / static_cast<double>(pts.size()));
  return {m, rms > 0.0 ? std::sqrt(2.0) / rms : 0.0};
}

/// Unit-norm algebraic least squares over [x², 2xy, y², 2x, 2y, 1].
/// Throws kRankDeficient when the points admit a pencil of conics, unless
/// `allow_rank_deficient` is set, in which case the smallest direction is returned
/// with the flag raised.
inline FitReport fit_conic(std::span<const Point> pts, double rank_tol = kDefaultTolerances.fit_rank,
                           bool allow_rank_deficient = false) {
  if (pts.size() < 6) throw GeometryError(ErrorKind::kRankDeficient, "at least 6 points required");
  const PointNormalization nz = normalize_points(pts);
  if (!(nz.scale > 0.0) || !std::isfinite(nz.scale)) {
    throw GeometryError(ErrorKind::kRankDeficient, "points coincide");
  }
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd d(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point q = nz.scale * (pts[static_cast<std::size_t>(i)] - nz.centroid);
    d.row(i) << q.x * q.x, 2.0 * q.x * q.y, q.y * q.y, 2.0 * q.x, 2.0 * q.y, 1.0;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const Eigen::VectorXd v = svd.matrixV().col(5);

  FitReport out{};
  out.residual = sv(5) / std::sqrt(static_cast<double>(n));
  out.condition = sv(4) / sv(0);
  out.rank_deficient = out.condition < rank_tol;
  if (out.rank_deficient && !allow_rank_deficient) {
    throw GeometryError(ErrorKind::kRankDeficient, "points admit a pencil of conics");
  }
  // Undo q = s(p − m): quadratic terms pick up s², linear terms s.
  const double s = nz.scale;
  const Conic local{v(0) * s * s, v(1) * s * s, v(2) * s * s, v(3) * s, v(4) * s, v(5)};
  out.conic = local.translated(nz.centroid).normalized();
  return out;
}

inline FitReport fit_conic(const std::vector<Point>& pts, double rank_tol = kDefaultTolerances.fit_rank,
                           bool allow_rank_deficient = false) {
  return fit_conic(std::span<const Point>(pts), rank_tol, allow_rank_deficient);
}

enum class ConicClass {
  kEllipse,
  kCircle,
  kParabola,
  kHyperbola,
  kLinePair,
  kDegenerateEllipse,  // a single real point
  kImaginary,
};

inline const char* to_string(ConicClass c) {
  switch (c) {
    case ConicClass::kEllipse: return "ellipse";
    case ConicClass::kCircle: return "circle";
    case ConicClass::kParabola: return "parabola";
    case ConicClass::kHyperbola: return "hyperbola";
    case ConicClass::kLinePair: return "line-pair";
    case ConicClass::kDegenerateEllipse: return "degenerate-ellipse";
    case ConicClass::kImaginary: return "imaginary";
  }
  return "unknown";
}

/// Discriminant classification on the unit-normalized coefficients.
inline ConicClass classify_conic(const Conic& input, double tol = kDefaultTolerances.conic_classify) {
  const Conic c = input.normalized();
  const double d2 = c.quadratic_determinant();
  const double d3 = c.full_determinant();
  if (std::abs(d3) < tol) {
    return d2 > tol ? ConicClass::kDegenerateEllipse : ConicClass::kLinePair;
  }
  if (d2 > tol) {
    if (d3 * (c.a20 + c.a02) > 0.0) return ConicClass::kImaginary;
    if (std::abs(c.a20 - c.a02) < tol && std::abs(c.a11) < tol) return ConicClass::kCircle;
    return ConicClass::kEllipse;
  }
  if (d2 < -tol) return ConicClass::kHyperbola;
  return ConicClass::kParabola;
}

// ---- numeric envelopes ----

/// F(p; s) for a one-parameter family of implicit curves.
using ImplicitFamily = std::function<double(Point, double)>;

struct EnvelopePoint {
  Point p;
  double s;
  /// |F| / |∇F|, i.e. approximate distance to the member.
  double member_residual;
  /// |∂F/∂s| / |∇F|.
  double stationarity;
};

struct EnvelopeOptions {
  double delta = kDefaultTolerances.envelope_delta;
  int max_iterations = 60;
  double step_tol = 1e-11;  // residual noise of the divided difference sits near 1e-12
};

namespace detail {

inline Vec2 grad_fd(const ImplicitFamily& f, Point p, double s, double h) {
  return {(f({p.x + h, p.y}, s) - f({p.x - h, p.y}, s)) / (2.0 * h),
          (f({p.x, p.y + h}, s) - f({p.x, p.y - h}, s)) / (2.0 * h)};
}

}  // namespace detail

/// Intersection of F(·; s − δ/2) = 0 and F(·; s + δ/2) = 0 nearest `seed`, by Newton.
/// Returns nullopt where the neighbors do not meet near the seed.
inline std::optional<EnvelopePoint> envelope_point(const ImplicitFamily& f, double s, Point seed,
                                                   double scale, const EnvelopeOptions& opt = {}) {
  const double lo = s - opt.delta / 2.0;
  const double hi = s + opt.delta / 2.0;
  const double h = 1e-6 * scale;
  // F(lo) = F(hi) = 0 rewritten as mean = 0 and divided difference = 0: same roots, but the
  // two gradients are no longer nearly parallel.
  const ImplicitFamily mean = [&](Point q, double) { return 0.5 * (f(q, lo) + f(q, hi)); };
  const ImplicitFamily diff = [&](Point q, double) { return (f(q, hi) - f(q, lo)) / opt.delta; };
  Point p = seed;
  bool converged = false;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const Vec2 g1 = detail::grad_fd(mean, p, s, h);
    const Vec2 g2 = detail::grad_fd(diff, p, s, h);
    if (std::abs(cross(g1, g2)) < 1e-300) return std::nullopt;
    const Vec2 step = detail::solve2(g1, -mean(p, s), g2, -diff(p, s));
    if (!std::isfinite(step.x) || !std::isfinite(step.y)) return std::nullopt;
    // Damp steps that would leave the neighborhood.
    const double len = norm(step);
    p += len > scale ? step * (scale / len) : step;
    if (len < opt.step_tol * scale) {
      converged = true;
      break;
    }
  }
  if (!converged) return std::nullopt;
  const Vec2 g = detail::grad_fd(f, p, s, h);
  const double gn = norm(g);
  if (!(gn > 0.0)) return std::nullopt;
  const double ds = 1e-5;
  const double fs = (f(p, s + ds) - f(p, s - ds)) / (2.0 * ds);
  return EnvelopePoint{p, s, std::abs(f(p, s)) / gn, std::abs(fs) / gn};
}

/// Envelope points over a parameter grid; `seeds(s)` proposes starting points per s.
/// Branches that fail to converge are skipped.
inline std::vector<EnvelopePoint> numeric_envelope(const ImplicitFamily& f, std::span<const double> grid,
                                                   const std::function<std::vector<Point>(double)>& seeds,
                                                   double scale, const EnvelopeOptions& opt = {}) {
  std::vector<EnvelopePoint> out;
  for (double s : grid) {
    for (const Point& seed : seeds(s)) {
      if (auto e = envelope_point(f, s, seed, scale, opt)) out.push_back(*e);
    }
  }
  return out;
}

// A one-parameter family of lines n(s)·p = h(s).
struct LineFamilyMember {
  Vec2 normal;
  double offset;
};
using LineFamily = std::function<LineFamilyMember(double)>;

/// Characteristic point of a line family: n·p = h, n'·p = h', with s-derivatives by
/// central differences.
inline std::optional<Point> line_envelope_point(const LineFamily& fam, double s, double ds = 1e-5) {
  const LineFamilyMember m = fam(s);
  const LineFamilyMember mp = fam(s + ds);
  const LineFamilyMember mm = fam(s - ds);
  const Vec2 nd = (mp.normal - mm.normal) / (2.0 * ds);
  const double hd = (mp.offset - mm.offset) / (2.0 * ds);
  const double det = cross(m.normal, nd);
  if (std::abs(det) < 1e-14 * norm(m.normal) * norm(m.normal)) return std::nullopt;
  return detail::solve2(m.normal, m.offset, nd, hd);
}

namespace detail {

inline std::pair<double, double> golden_section(const std::function<double(double)>& r, double x0, double x3) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = x3 - g * (x3 - x0);
  double x2 = x0 + g * (x3 - x0);
  double f1 = r(x1);
  double f2 = r(x2);
  for (int it = 0; it < 200 && x3 - x0 > 1e-15 * (1.0 + std::abs(x0)); ++it) {
    if (f1 < f2) {
      x3 = x2;
      x2 = x1;
      f2 = f1;
      x1 = x3 - g * (x3 - x0);
      f1 = r(x1);
    } else {
      x0 = x1;
      x1 = x2;
      f1 = f2;
      x2 = x0 + g * (x3 - x0);
      f2 = r(x2);
    }
  }
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace detail

/// Minimum over s ∈ [lo, hi] of a nonnegative residual r(s): grid scan, then golden-section
/// refinement around every local minimum of the grid. Near a cusp the best sample may sit on
/// the wrong branch, so refining only that one is not enough.
inline double minimize_over_parameter(const std::function<double(double)>& r, double lo, double hi,
                                      int grid = 512, double* argmin = nullptr) {
  const double step = (hi - lo) / grid;
  std::vector<double> v(static_cast<std::size_t>(grid) + 1);
  for (int i = 0; i <= grid; ++i) v[static_cast<std::size_t>(i)] = r(lo + step * i);
  double best_s = lo;
  double best = v[0];
  for (int i = 0; i <= grid; ++i) {
    const double cur = v[static_cast<std::size_t>(i)];
    const double left = i > 0 ? v[static_cast<std::size_t>(i - 1)] : cur;
    const double right = i < grid ? v[static_cast<std::size_t>(i + 1)] : cur;
    if (cur < best) {
      best = cur;
      best_s = lo + step * i;
    }
    if (cur > left || cur > right) continue;
    const double s = lo + step * i;
    const auto [s_min, f_min] = detail::golden_section(r, std::max(lo, s - step), std::min(hi, s + step));
    if (f_min < best) {
      best = f_min;
      best_s = s_min;
    }
  }
  if (argmin) *argmin = best_s;
  return best;
}

/// Distance from p to the nearest member of a line family over [lo, hi].
inline double line_family_membership(const LineFamily& fam, Point p, double lo, double hi, int grid = 512) {
  return minimize_over_parameter(
      [&](double s) {
        const LineFamilyMember m = fam(s);
        return std::abs(dot(m.normal, p) - m.offset) / norm(m.normal);
      },
      lo, hi, grid);
}

// ---- quadrature ----

/// (1/2)∮(x dy − y dx) by the periodic trapezoid rule over n samples.
inline double curve_area(const ParamCurve& c, int n = 4096, double closed_tol = kDefaultTolerances.closed_curve) {
  const Point start = c(c.lo());
  const Point end = c(c.hi());
  const double scale = std::max(1.0, norm(start));
  if (!c.closed() || distance(start, end) > closed_tol * scale) {
    throw GeometryError(ErrorKind::kNotClosed, "curve is not closed");
  }
  const double h = (c.hi() - c.lo()) / n;
  // Neumaier summation: the deltoid integrand changes sign, and plain summation leaves the
  // result dependent on traversal order.
  double s = 0.0;
  double comp = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = c.lo() + h * i;
    const double v = cross(c(u), c.derivative(u));
    const double t = s + v;
    comp += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  return 0.5 * (s + comp) * h;
}

/// Shoelace area of a closed polygon.
inline double polygon_area(std::span<const Point> pts) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) s += cross(pts[i], pts[(i + 1) % pts.size()]);
  return 0.5 * s;
}

}  // namespace ellipse_loci
