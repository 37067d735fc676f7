// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Base ellipse, its boundary parametrization and chord geometry.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "ellipse_loci/error.hpp"
#include "ellipse_loci/tolerances.hpp"

namespace ellipse_loci {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend constexpr Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Vec2 operator-(Vec2 p) { return {-p.x, -p.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Vec2 operator*(Vec2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Vec2 operator/(Vec2 p, double s) { return {p.x / s, p.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

using Point = Vec2;

constexpr double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Vec2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
constexpr Vec2 perpendicular(Vec2 p) { return {-p.y, p.x}; }
constexpr Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2.0, (p.y + q.y) / 2.0}; }

namespace detail {

// Solves n1·p = h1, n2·p = h2.
inline Point solve2(Vec2 n1, double h1, Vec2 n2, double h2) {
  const double det = cross(n1, n2);
  return {(h1 * n2.y - h2 * n1.y) / det, (n1.x * h2 - n2.x * h1) / det};
}

}  // namespace detail

/// True when s ≡ s' (mod 2π) within `tol`.
inline bool angles_equal(double s, double s_prime, double tol = kDefaultTolerances.angle_equal) {
  return std::abs(std::remainder(s - s_prime, kTwoPi)) < tol;
}

// Origin-centered, axis-aligned ellipse x²/a² + y²/b² = 1 with a ≥ b > 0.
class Ellipse {
 public:
  Ellipse(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0)) {
      throw GeometryError(ErrorKind::kInvalidEllipse, "semi-axes must be finite and positive");
    }
    if (a < b) {
      throw GeometryError(ErrorKind::kInvalidEllipse, "a >= b required");
    }
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c2() const { return a_ * a_ - b_ * b_; }
  double d2() const { return a_ * a_ + b_ * b_; }
  double c() const { return std::sqrt(c2()); }
  bool is_circle() const { return a_ == b_; }

  Point center() const { return {0.0, 0.0}; }
  Point focus1() const { return {-c(), 0.0}; }
  Point focus2() const { return {c(), 0.0}; }

  /// x²/a² + y²/b² − 1.
  double implicit(Point p) const { return p.x * p.x / (a_ * a_) + p.y * p.y / (b_ * b_) - 1.0; }

 private:
  double a_;
  double b_;
};

/// U(s) = [a cos s, b sin s].
inline Point boundary_point(const Ellipse& e, double s) {
  return {e.a() * std::cos(s), e.b() * std::sin(s)};
}

/// dU/ds.
inline Vec2 boundary_tangent(const Ellipse& e, double s) {
  return {-e.a() * std::sin(s), e.b() * std::cos(s)};
}

// Pinned parameters of V1 = U(t1), V2 = U(t2). Angles are never reduced.
class TriangleConfig {
 public:
  TriangleConfig(double t1, double t2) : t1_(t1), t2_(t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2)) {
      throw GeometryError(ErrorKind::kInvalidConfig, "angles must be finite");
    }
    if (angles_equal(t1, t2)) {
      throw GeometryError(ErrorKind::kInvalidConfig, "pinned vertices coincide (t1 = t2 mod 2pi)");
    }
  }

  double t1() const { return t1_; }
  double t2() const { return t2_; }
  /// t0 = t1 + t2, constant over a family of parallel chords.
  double t0() const { return t1_ + t2_; }
  /// z = cos(t1 + t2).
  double z() const { return std::cos(t0()); }

  bool vertical_chord() const { return angles_equal(t0(), 0.0); }
  bool horizontal_chord() const { return angles_equal(t0(), kPi); }
  /// V1V2 passes through O.
  bool antipodal() const { return angles_equal(t2_, t1_ + kPi); }

 private:
  double t1_;
  double t2_;
};

// Slope of a line, with vertical as a distinct alternative instead of ±inf.
class Slope {
 public:
  static Slope finite(double m) { return Slope(m); }
  static Slope vertical() { return Slope(std::nullopt); }

  bool is_vertical() const { return !value_.has_value(); }
  double value() const {
    if (!value_) throw GeometryError(ErrorKind::kUndefined, "slope is vertical");
    return *value_;
  }

 private:
  explicit Slope(std::optional<double> v) : value_(v) {}
  std::optional<double> value_;
};

// A x + B y + C = 0 with A² + B² = 1 and the first nonzero of (A, B) positive.
class Line {
 public:
  static Line from_coefficients(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw GeometryError(ErrorKind::kUndefined, "line normal vanishes");
    }
    a /= n;
    b /= n;
    c /= n;
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
      a = -a;
      b = -b;
      c = -c;
    }
    return Line(a, b, c);
  }

  static Line through(Point p, Vec2 direction) {
    const Vec2 n = perpendicular(direction);
    return from_coefficients(n.x, n.y, -dot(n, p));
  }

  double A() const { return a_; }
  double B() const { return b_; }
  double C() const { return c_; }

  Vec2 normal() const { return {a_, b_}; }
  Vec2 direction() const { return {-b_, a_}; }
  /// Signed distance (the normal has unit length).
  double signed_distance(Point p) const { return a_ * p.x + b_ * p.y + c_; }
  double distance(Point p) const { return std::abs(signed_distance(p)); }

  Slope slope() const {
    if (b_ == 0.0) return Slope::vertical();
    return Slope::finite(-a_ / b_);
  }

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_;
  double b_;
  double c_;
};

/// Slope of V1V2: −(b/a)·cot(t0/2), vertical when t0 ≡ 0 (mod 2π).
inline Slope chord_slope(const Ellipse& e, const TriangleConfig& cfg) {
  if (cfg.vertical_chord()) return Slope::vertical();
  const double half = cfg.t0() / 2.0;
  return Slope::finite(-(e.b() / e.a()) * std::cos(half) / std::sin(half));
}

/// Unit direction of V1V2 as a function of t0 only.
inline Vec2 chord_direction(const Ellipse& e, const TriangleConfig& cfg) {
  const double half = cfg.t0() / 2.0;
  const Vec2 d{-e.a() * std::sin(half), e.b() * std::cos(half)};
  return d / norm(d);
}

/// Coefficients of −2a sin(t0) x + 2b(cos t0 + 1) y + c²(cos t1 + cos t2) sin t0 = 0,
/// exactly as written; identically zero when t0 ≡ π.
struct RawLine {
  double x = 0.0;
  double y = 0.0;
  double constant = 0.0;
  double operator()(Point p) const { return x * p.x + y * p.y + constant; }
};

inline RawLine perp_bisector_coefficients(const Ellipse& e, const TriangleConfig& cfg) {
  const double s0 = std::sin(cfg.t0());
  return {-2.0 * e.a() * s0, 2.0 * e.b() * (std::cos(cfg.t0()) + 1.0),
          e.c2() * (std::cos(cfg.t1()) + std::cos(cfg.t2())) * s0};
}

struct Bisector {
  Line line;
  /// The closed-form coefficients vanished (t0 ≡ π); the line was rebuilt from
  /// the chord midpoint and perpendicularity.
  bool from_limit = false;
};

inline Bisector perp_bisector(const Ellipse& e, const TriangleConfig& cfg) {
  // The closed form is 4cos(t0/2) times the true bisector; near t0 ≡ π it loses
  // all significant digits.
  if (std::abs(std::cos(cfg.t0() / 2.0)) > 1e-6) {
    const RawLine raw = perp_bisector_coefficients(e, cfg);
    return {Line::from_coefficients(raw.x, raw.y, raw.constant), false};
  }
  const Point v1 = boundary_point(e, cfg.t1());
  const Point v2 = boundary_point(e, cfg.t2());
  return {Line::through(midpoint(v1, v2), perpendicular(v2 - v1)), true};
}

}  // namespace ellipse_loci
