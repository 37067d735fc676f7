// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "ellipse_loci/core.hpp"

namespace ellipse_loci {

// a20 x² + 2 a11 x y + a02 y² + 2 a10 x + 2 a01 y + a00 = 0
struct Conic {
  double a20 = 0.0;
  double a11 = 0.0;
  double a02 = 0.0;
  double a10 = 0.0;
  double a01 = 0.0;
  double a00 = 0.0;

  double operator()(Point p) const {
    return a20 * p.x * p.x + 2.0 * a11 * p.x * p.y + a02 * p.y * p.y + 2.0 * a10 * p.x +
           2.0 * a01 * p.y + a00;
  }

  Vec2 gradient(Point p) const {
    return {2.0 * (a20 * p.x + a11 * p.y + a10), 2.0 * (a11 * p.x + a02 * p.y + a01)};
  }

  std::array<double, 6> coefficients() const { return {a20, a11, a02, a10, a01, a00}; }

  static Conic from_coefficients(const std::array<double, 6>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }

  double coefficient_norm() const {
    double s = 0.0;
    for (double v : coefficients()) s += v * v;
    return std::sqrt(s);
  }

  /// Unit coefficient vector with a20 ≥ 0 (a11 > 0 when a20 = 0).
  Conic normalized() const {
    const double n = coefficient_norm();
    double sign = 1.0;
    if (a20 < 0.0 || (a20 == 0.0 && a11 < 0.0) || (a20 == 0.0 && a11 == 0.0 && a02 < 0.0)) sign = -1.0;
    std::array<double, 6> v = coefficients();
    for (double& x : v) x *= sign / n;
    return from_coefficients(v);
  }

  /// The conic whose zero set is this one moved by `offset`: C'(p) = C(p − offset).
  Conic translated(Vec2 offset) const {
    const double x0 = offset.x;
    const double y0 = offset.y;
    Conic out = *this;
    out.a10 = a10 - a20 * x0 - a11 * y0;
    out.a01 = a01 - a11 * x0 - a02 * y0;
    out.a00 = (*this)(Point{-x0, -y0});
    return out;
  }

  /// Quadratic-part determinant a20 a02 − a11².
  double quadratic_determinant() const { return a20 * a02 - a11 * a11; }

  /// Determinant of the full 3×3 matrix.
  double full_determinant() const {
    return a20 * (a02 * a00 - a01 * a01) - a11 * (a11 * a00 - a01 * a10) +
           a10 * (a11 * a01 - a02 * a10);
  }
};

/// |cos| of the angle between two coefficient vectors.
inline double coefficient_cosine(const Conic& p, const Conic& q) {
  const auto u = p.coefficients();
  const auto v = q.coefficients();
  double s = 0.0;
  for (std::size_t i = 0; i < 6; ++i) s += u[i] * v[i];
  return std::abs(s) / (p.coefficient_norm() * q.coefficient_norm());
}

// Reduced ellipse. semi_minor = 0 is a segment, both zero a point.
// rotation is the major-axis angle in (−π/2, π/2].
struct EllipseGeometry {
  Point center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double rotation = 0.0;

  double aspect_ratio() const { return semi_major / semi_minor; }
  double axis_product() const { return semi_major * semi_minor; }

  Vec2 major_direction() const { return {std::cos(rotation), std::sin(rotation)}; }
  Vec2 minor_direction() const { return perpendicular(major_direction()); }

  Point point_at(double s) const {
    return center + semi_major * std::cos(s) * major_direction() +
           semi_minor * std::sin(s) * minor_direction();
  }

  /// Implicit form ((p−c)·u)²/A² + ((p−c)·v)²/B² − 1 (non-degenerate only).
  Conic to_conic() const {
    const Vec2 u = major_direction();
    const Vec2 v = minor_direction();
    const double ia = 1.0 / (semi_major * semi_major);
    const double ib = 1.0 / (semi_minor * semi_minor);
    Conic centered{ia * u.x * u.x + ib * v.x * v.x, ia * u.x * u.y + ib * v.x * v.y,
                   ia * u.y * u.y + ib * v.y * v.y, 0.0, 0.0, -1.0};
    return centered.translated(center);
  }
};

struct Segment {
  Point p;
  Point q;
  double length() const { return distance(p, q); }
};

/// Reduces an angle to (−π/2, π/2] (axis directions are unoriented).
inline double reduce_axis_angle(double theta) {
  double r = std::remainder(theta, kPi);  // [−π/2, π/2]
  if (r <= -kPi / 2.0) r += kPi;
  return r;
}

struct SymmetricEigen2 {
  double lambda_min;
  double lambda_max;
  Vec2 v_min;  // unit eigenvector of lambda_min
};

/// Closed-form eigen-decomposition of [[p, q], [q, r]].
inline SymmetricEigen2 symmetric_eigen2(double p, double q, double r) {
  const double mean = (p + r) / 2.0;
  const double radius = std::hypot((p - r) / 2.0, q);
  SymmetricEigen2 out{mean - radius, mean + radius, {1.0, 0.0}};
  if (radius > 0.0) {
    // Eigenvector of λ_min is orthogonal to that of λ_max; the angle of the
    // λ_max eigenvector is atan2(2q, p − r)/2.
    const double theta_max = 0.5 * std::atan2(2.0 * q, p - r);
    out.v_min = {-std::sin(theta_max), std::cos(theta_max)};
  }
  return out;
}

/// Semi-axes and orientation of a (possibly point-degenerate) real ellipse.
/// Throws kNotAnEllipse for hyperbolas, parabolas, line pairs and empty conics.
inline EllipseGeometry axis_geometry(const Conic& input) {
  const Conic c = input.normalized();
  const double det = c.quadratic_determinant();
  const double quad_scale = c.a20 * c.a20 + 2.0 * c.a11 * c.a11 + c.a02 * c.a02;
  if (!(quad_scale > 0.0) || det <= 1e-14 * quad_scale) {
    throw GeometryError(ErrorKind::kNotAnEllipse, "quadratic part is not definite");
  }
  const Point center = detail::solve2({c.a20, c.a11}, -c.a10, {c.a11, c.a02}, -c.a01);
  const double f0 = c(center);
  // After normalization a20 ≥ 0, so with det > 0 the form is positive definite.
  if (f0 > 1e-14) {
    throw GeometryError(ErrorKind::kNotAnEllipse, "conic has no real points");
  }
  const SymmetricEigen2 eig = symmetric_eigen2(c.a20, c.a11, c.a02);
  const double k = std::max(-f0, 0.0);
  EllipseGeometry g;
  g.center = center;
  g.semi_major = std::sqrt(k / eig.lambda_min);
  g.semi_minor = std::sqrt(k / eig.lambda_max);
  g.rotation = eig.lambda_max - eig.lambda_min > 1e-15 * eig.lambda_max
                   ? reduce_axis_angle(std::atan2(eig.v_min.y, eig.v_min.x))
                   : 0.0;
  return g;
}

/// Geometry of the image of the unit circle under p(s) = center + M·(cos s, sin s),
/// via the singular values of M (columns m_cos, m_sin).
inline EllipseGeometry ellipse_from_matrix(Point center, Vec2 m_cos, Vec2 m_sin) {
  // M Mᵀ = [[p, q], [q, r]]; semi-axes are √eigenvalues, major along v_max.
  const double p = m_cos.x * m_cos.x + m_sin.x * m_sin.x;
  const double q = m_cos.x * m_cos.y + m_sin.x * m_sin.y;
  const double r = m_cos.y * m_cos.y + m_sin.y * m_sin.y;
  const SymmetricEigen2 eig = symmetric_eigen2(p, q, r);
  EllipseGeometry g;
  g.center = center;
  g.semi_major = std::sqrt(std::max(eig.lambda_max, 0.0));
  // λ_min from the determinant is accurate even for thin ellipses.
  const double det = std::abs(cross(m_cos, m_sin));
  g.semi_minor = g.semi_major > 0.0 ? det / g.semi_major : 0.0;
  const Vec2 v_max = perpendicular(eig.v_min);
  g.rotation = eig.lambda_max - eig.lambda_min > 1e-15 * eig.lambda_max
                   ? reduce_axis_angle(std::atan2(v_max.y, v_max.x))
                   : 0.0;
  return g;
}

}  // namespace ellipse_loci
