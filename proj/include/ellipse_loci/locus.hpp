// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Closed forms for the X_ρ loci over T(t) = V1 V2 P(t).
//
// Shorthand used throughout:
//   K = a²(ρ+2) + 3b²ρ,   L = 3a²ρ + b²(ρ+2),   z = cos t0,   t0 = t1 + t2.

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/curve.hpp"

namespace ellipse_loci {

namespace detail {

inline double k_coef(const Ellipse& e, double rho) {
  return e.a() * e.a() * (rho + 2.0) + 3.0 * e.b() * e.b() * rho;
}
inline double l_coef(const Ellipse& e, double rho) {
  return 3.0 * e.a() * e.a() * rho + e.b() * e.b() * (rho + 2.0);
}
inline double sum_cos(const TriangleConfig& cfg) { return std::cos(cfg.t1()) + std::cos(cfg.t2()); }
inline double sum_sin(const TriangleConfig& cfg) { return std::sin(cfg.t1()) + std::sin(cfg.t2()); }

inline EllipseGeometry axis_parallel(Point center, double x_axis, double y_axis) {
  x_axis = std::abs(x_axis);
  y_axis = std::abs(y_axis);
  if (x_axis >= y_axis) return {center, x_axis, y_axis, 0.0};
  return {center, y_axis, x_axis, kPi / 2.0};
}

}  // namespace detail

/// Locus of X2: center (V1+V2)/3, axes (a/3, b/3).
inline EllipseGeometry x2_locus(const Ellipse& e, const TriangleConfig& cfg) {
  const Point c = (boundary_point(e, cfg.t1()) + boundary_point(e, cfg.t2())) / 3.0;
  return detail::axis_parallel(c, e.a() / 3.0, e.b() / 3.0);
}

/// w = (√2/2)·√(a⁴ + b⁴ + (b⁴ − a⁴) z).
inline double x4_w(const Ellipse& e, const TriangleConfig& cfg) {
  const double a4 = std::pow(e.a(), 4);
  const double b4 = std::pow(e.b(), 4);
  return std::sqrt(2.0) / 2.0 * std::sqrt(a4 + b4 + (b4 - a4) * cfg.z());
}

/// Center of the X4 locus, (d²/2)[(cos t1 + cos t2)/a, (sin t1 + sin t2)/b].
inline Point x4_center(const Ellipse& e, const TriangleConfig& cfg) {
  return {e.d2() / 2.0 * detail::sum_cos(cfg) / e.a(), e.d2() / 2.0 * detail::sum_sin(cfg) / e.b()};
}

/// Locus of X4: axis-parallel with axes (w/a, w/b), i.e. E rotated a quarter turn.
inline EllipseGeometry x4_locus(const Ellipse& e, const TriangleConfig& cfg) {
  const double w = x4_w(e, cfg);
  return detail::axis_parallel(x4_center(e, cfg), w / e.a(), w / e.b());
}

/// X4 of T(t) in closed form.
inline Point x4_parametric(const Ellipse& e, const TriangleConfig& cfg, double t) {
  const double s = t + cfg.t0();
  return {(e.d2() * (detail::sum_cos(cfg) + std::cos(t)) - e.c2() * std::cos(s)) / (2.0 * e.a()),
          (e.d2() * (detail::sum_sin(cfg) + std::sin(t)) - e.c2() * std::sin(s)) / (2.0 * e.b())};
}

/// X3 of T(t) in closed form.
inline Point x3_parametric(const Ellipse& e, const TriangleConfig& cfg, double t) {
  const double s = t + cfg.t0();
  return {e.c2() / (4.0 * e.a()) * (std::cos(s) + detail::sum_cos(cfg) + std::cos(t)),
          e.c2() / (4.0 * e.b()) * (std::sin(s) - detail::sum_sin(cfg) - std::sin(t))};
}

/// X_ρ of T(t) in closed form.
inline Point xrho_point(const Ellipse& e, const TriangleConfig& cfg, double rho, double t) {
  const double k = detail::k_coef(e, rho);
  const double l = detail::l_coef(e, rho);
  const double s = t + cfg.t0();
  return {k * (detail::sum_cos(cfg) + std::cos(t)) / (6.0 * e.a()) -
              e.c2() * rho * std::cos(s) / (2.0 * e.a()),
          l * (detail::sum_sin(cfg) + std::sin(t)) / (6.0 * e.b()) -
              e.c2() * rho * std::sin(s) / (2.0 * e.b())};
}

/// O_ρ.
inline Point xrho_center(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  return {detail::k_coef(e, rho) * detail::sum_cos(cfg) / (6.0 * e.a()),
          detail::l_coef(e, rho) * detail::sum_sin(cfg) / (6.0 * e.b())};
}

/// Columns of M in X_ρ(t) − O_ρ = M·(cos t, sin t).
struct LocusMatrix {
  Vec2 m_cos;
  Vec2 m_sin;
};

inline LocusMatrix xrho_matrix(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  const double k = detail::k_coef(e, rho);
  const double l = detail::l_coef(e, rho);
  const double z = cfg.z();
  const double s0 = std::sin(cfg.t0());
  const double g = e.c2() * rho / 2.0;
  return {{k / (6.0 * e.a()) - g * z / e.a(), -g * s0 / e.b()},
          {g * s0 / e.a(), l / (6.0 * e.b()) - g * z / e.b()}};
}

inline ParamCurve xrho_locus_param(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  const Point o = xrho_center(e, cfg, rho);
  const LocusMatrix m = xrho_matrix(e, cfg, rho);
  return ParamCurve::periodic(
      [o, m](double t) { return o + std::cos(t) * m.m_cos + std::sin(t) * m.m_sin; },
      [m](double t) { return -std::sin(t) * m.m_cos + std::cos(t) * m.m_sin; });
}

/// Axes and rotation of the X_ρ locus from the parametric matrix (no implicit form involved).
inline EllipseGeometry xrho_geometry(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  const LocusMatrix m = xrho_matrix(e, cfg, rho);
  return ellipse_from_matrix(xrho_center(e, cfg, rho), m.m_cos, m.m_sin);
}

/// Center-origin implicit form a20 x² + 2a11 xy + a02 y² + a00 = 0 of the X_ρ locus.
inline Conic xrho_implicit(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  const double a = e.a();
  const double b = e.b();
  const double a2 = a * a;
  const double b2 = b * b;
  const double a4 = a2 * a2;
  const double b4 = b2 * b2;
  const double c2 = e.c2();
  const double z = cfg.z();
  const double r = rho;
  Conic q;
  q.a20 = 54.0 * a2 * r * c2 * (3.0 * a2 * r + b2 * r + 2.0 * b2) * z -
          18.0 * a2 * (9.0 * a4 - 6.0 * a2 * b2 + 5.0 * b4) * r * r -
          36.0 * a2 * b2 * (3.0 * a2 + b2) * r - 36.0 * a2 * b4;
  q.a11 = 54.0 * r * (r - 1.0) * a * b * c2 * c2 * std::sin(cfg.t0());
  q.a02 = 54.0 * b2 * r * c2 * (a2 * r + 3.0 * b2 * r + 2.0 * a2) * z -
          18.0 * b2 * (5.0 * a4 - 6.0 * a2 * b2 + 9.0 * b4) * r * r -
          36.0 * b2 * (a2 + 3.0 * b2) * a2 * r - 36.0 * b2 * a4;
  const double inner = 3.0 * a4 * r * z - 3.0 * b4 * r * z - 3.0 * a4 * r + 2.0 * a2 * b2 * r -
                       3.0 * b4 * r - 2.0 * a2 * b2;
  q.a00 = (2.0 * r + 1.0) * (2.0 * r + 1.0) * inner * inner;
  return q;
}

/// xrho_implicit moved to O_ρ.
inline Conic xrho_conic(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  return xrho_implicit(e, cfg, rho).translated(xrho_center(e, cfg, rho));
}

/// a_ρ·b_ρ = |(2ρ+1)(2a²b²(ρ−1) + 3ρ(a⁴−b⁴)z − 3ρ(a⁴+b⁴))| / (18ab).
inline double axis_product(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double a4 = a2 * a2;
  const double b4 = b2 * b2;
  const double v = (2.0 * rho + 1.0) *
                   (2.0 * a2 * b2 * (rho - 1.0) + 3.0 * rho * (a4 - b4) * cfg.z() - 3.0 * rho * (a4 + b4));
  return std::abs(v) / (18.0 * e.a() * e.b());
}

/// |a00| / √(a20 a02 − a11²) for a center-origin conic.
inline double axis_product_from_implicit(const Conic& centered) {
  return std::abs(centered.a00) / std::sqrt(centered.quadratic_determinant());
}

/// major/minor of a definite quadratic form, from its eigenvalues.
inline double axis_ratio(const Conic& c) {
  const SymmetricEigen2 eig = symmetric_eigen2(c.a20, c.a11, c.a02);
  // Semi-axes scale as 1/√|λ|; the form may be negative definite.
  const double hi = std::max(std::abs(eig.lambda_max), std::abs(eig.lambda_min));
  const double lo = std::min(std::abs(eig.lambda_max), std::abs(eig.lambda_min));
  return std::sqrt(hi / lo);
}

struct RatioCrossCheck {
  double eigen_ratio;
  /// (a20 + a02 + √D) / (2(a20 a02 − a11²)), D = (a20 − a02)² + 4a11².
  double trace_over_determinant;
  /// √((|T| + √D) / (|T| − √D)), T = a20 + a02.
  double eigenvalue_reading;
};

inline RatioCrossCheck ratio_cross_check(const Conic& c) {
  const double tr = c.a20 + c.a02;
  const double sd = std::sqrt((c.a20 - c.a02) * (c.a20 - c.a02) + 4.0 * c.a11 * c.a11);
  RatioCrossCheck out{};
  out.eigen_ratio = axis_ratio(c);
  out.trace_over_determinant = (tr + sd) / (2.0 * c.quadratic_determinant());
  out.eigenvalue_reading = std::sqrt((std::abs(tr) + sd) / (std::abs(tr) - sd));
  return out;
}

struct AnnihilatingRho {
  double rho;
  /// a = b: the root is −1/2, the same as the X3 segment root.
  bool circle_degenerate = false;
};

/// The ρ ≠ −1/2 at which one locus axis vanishes:
/// ρ = 2a²b² / (3(a⁴−b⁴) cos t0 + 2a²b² − 3a⁴ − 3b⁴).
inline AnnihilatingRho annihilating_rho(const Ellipse& e, double t0,
                                        double tol = kDefaultTolerances.annihilation_denominator) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double a4 = a2 * a2;
  const double b4 = b2 * b2;
  const double den = 3.0 * (a4 - b4) * std::cos(t0) + 2.0 * a2 * b2 - 3.0 * a4 - 3.0 * b4;
  if (std::abs(den) < tol * a4) {
    throw GeometryError(ErrorKind::kNoAnnihilatingRho, "annihilation denominator vanishes");
  }
  return {2.0 * a2 * b2 / den, e.is_circle()};
}

enum class ChordOrientation { kHorizontal, kVertical };

struct CircleBranch {
  double rho;
  double radius;
  /// Center is [0, k·sin t1] for horizontal chords and [k·cos t1, 0] for vertical ones.
  double center_coefficient;
  ChordOrientation orientation;
  /// Branch with denominator ±: +1 or −1.
  int sign;
  Point center(double t1) const {
    if (orientation == ChordOrientation::kHorizontal) return {0.0, center_coefficient * std::sin(t1)};
    return {center_coefficient * std::cos(t1), 0.0};
  }
};

inline CircleBranch circle_branch(const Ellipse& e, ChordOrientation o, int sign) {
  const double a = e.a();
  const double b = e.b();
  if (o == ChordOrientation::kHorizontal) {
    if (sign > 0) return {b / (b + 3.0 * a), a * (a + b) / (b + 3.0 * a), (a + b) * (a + b) / (3.0 * a + b), o, 1};
    return {b / (b - 3.0 * a), a * (a - b) / (3.0 * a - b), (a - b) * (a - b) / (b - 3.0 * a), o, -1};
  }
  if (sign > 0) return {a / (a + 3.0 * b), b * (a + b) / (a + 3.0 * b), (a + b) * (a + b) / (a + 3.0 * b), o, 1};
  if (a == 3.0 * b) {
    throw GeometryError(ErrorKind::kBranchUndefined, "vertical minus branch undefined at a = 3b");
  }
  return {a / (a - 3.0 * b), std::abs(b * (a - b) / (a - 3.0 * b)), (a - b) * (a - b) / (a - 3.0 * b), o, -1};
}

/// The circular loci for axis-parallel chords. At a = 3b the vertical minus branch is left out.
inline std::vector<CircleBranch> circle_rhos(const Ellipse& e, ChordOrientation o) {
  std::vector<CircleBranch> out{circle_branch(e, o, 1)};
  if (!(o == ChordOrientation::kVertical && e.a() == 3.0 * e.b())) out.push_back(circle_branch(e, o, -1));
  return out;
}

/// a = 3b, vertical chord: axes b|2ρ−3|/3 (x), b|2ρ+1|/3 (y). The center is O_ρ, which here
/// reduces to [2b(2ρ+3) cos t1 / 3, 0].
inline EllipseGeometry a3b_locus(const Ellipse& e, const TriangleConfig& cfg, double rho) {
  if (std::abs(e.a() - 3.0 * e.b()) > 1e-12 * e.a()) {
    throw GeometryError(ErrorKind::kPreconditionViolated, "a = 3b required");
  }
  if (!cfg.vertical_chord()) {
    throw GeometryError(ErrorKind::kPreconditionViolated, "vertical chord (t1 + t2 = 0) required");
  }
  if (std::abs(rho + 0.5) < 1e-12 || std::abs(rho - 1.5) < 1e-12) {
    throw GeometryError(ErrorKind::kPreconditionViolated, "rho must differ from -1/2 and 3/2");
  }
  const double b = e.b();
  return detail::axis_parallel(xrho_center(e, cfg, rho), b * std::abs(2.0 * rho - 3.0) / 3.0, b * std::abs(2.0 * rho + 1.0) / 3.0);
}

struct X3Segment {
  Segment segment;
  Point midpoint;
  double length;
  /// t0 ≡ 0: the radical form has 0/0; endpoints come from the half-angle limit.
  bool vertical_chord_limit = false;
};

/// [(c²/4a)(cos t1 + cos t2), −(c²/4b)(sin t1 + sin t2)].
inline Point x3_midpoint(const Ellipse& e, const TriangleConfig& cfg) {
  return {e.c2() / (4.0 * e.a()) * detail::sum_cos(cfg), -e.c2() / (4.0 * e.b()) * detail::sum_sin(cfg)};
}

/// L3 = c²√(2(d² − c² cos t0)) / (2ab).
inline double x3_segment_length(const Ellipse& e, double t0) {
  return e.c2() * std::sqrt(2.0 * (e.d2() - e.c2() * std::cos(t0))) / (2.0 * e.a() * e.b());
}

/// Locus of X3. P3 has the lower y (for sin(t0/2) ≠ 0).
inline X3Segment x3_segment(const Ellipse& e, const TriangleConfig& cfg) {
  const double half = cfg.t0() / 2.0;
  const double sh = std::sin(half);
  X3Segment out;
  out.vertical_chord_limit = cfg.vertical_chord();
  const double sgn = (out.vertical_chord_limit || sh >= 0.0) ? 1.0 : -1.0;
  const Vec2 h{e.c2() / (2.0 * e.a()) * std::cos(half), e.c2() / (2.0 * e.b()) * sh};
  out.midpoint = x3_midpoint(e, cfg);
  out.segment = {out.midpoint - sgn * h, out.midpoint + sgn * h};
  out.length = x3_segment_length(e, cfg.t0());
  return out;
}

enum class LocusShape { kEllipse, kSegment, kPoint };

/// Degeneracy of a reduced locus, thresholds relative to a².
inline LocusShape classify_locus(const EllipseGeometry& g, const Ellipse& e, double tol = 1e-10) {
  const double scale = e.a() * e.a();
  if (g.semi_major * g.semi_major <= tol * scale) return LocusShape::kPoint;
  if (g.axis_product() <= tol * scale) return LocusShape::kSegment;
  return LocusShape::kEllipse;
}

inline const char* to_string(LocusShape s) {
  switch (s) {
    case LocusShape::kEllipse: return "ellipse";
    case LocusShape::kSegment: return "segment";
    case LocusShape::kPoint: return "point";
  }
  return "unknown";
}

}  // namespace ellipse_loci
