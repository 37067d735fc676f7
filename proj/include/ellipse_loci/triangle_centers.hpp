// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Triangle centers from vertex coordinates. Everything here is a generic
// construction (line intersections, barycentrics); nothing uses the
// family-specific closed forms in locus.hpp, so those stay falsifiable.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>

#include "ellipse_loci/core.hpp"

namespace ellipse_loci {

struct Triangle {
  Point v1;
  Point v2;
  Point v3;
};

/// Side lengths opposite v1, v2, v3.
struct SideLengths {
  double a;
  double b;
  double c;
};

inline SideLengths side_lengths(const Triangle& t) {
  return {distance(t.v2, t.v3), distance(t.v3, t.v1), distance(t.v1, t.v2)};
}

inline double longest_side(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  return std::max({s.a, s.b, s.c});
}

inline double signed_area(const Triangle& t) { return 0.5 * cross(t.v2 - t.v1, t.v3 - t.v1); }

/// Area / longest² below `tol`, or all vertices coincident.
inline bool is_degenerate(const Triangle& t, double tol = kDefaultTolerances.collinear) {
  const double l = longest_side(t);
  if (!(l > 0.0)) return true;
  return std::abs(signed_area(t)) / (l * l) < tol;
}

struct FamilyTriangle {
  Triangle triangle;
  /// P(t) coincides with a pinned vertex.
  bool degenerate = false;
};

/// T(t) = V1 V2 P(t).
inline FamilyTriangle make_triangle(const Ellipse& e, const TriangleConfig& cfg, double t) {
  FamilyTriangle out{{boundary_point(e, cfg.t1()), boundary_point(e, cfg.t2()), boundary_point(e, t)}};
  out.degenerate = angles_equal(t, cfg.t1()) || angles_equal(t, cfg.t2());
  return out;
}

/// X2.
inline Point barycenter(const Triangle& t) { return (t.v1 + t.v2 + t.v3) / 3.0; }

namespace detail {

inline void require_nondegenerate(const Triangle& t, ErrorKind kind) {
  if (is_degenerate(t)) throw GeometryError(kind, "triangle has collinear or coincident vertices");
}

}  // namespace detail

/// X3: intersection of two perpendicular bisectors.
inline Point circumcenter(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kCollinearVertices);
  // Work relative to v1 for conditioning.
  const Vec2 p = t.v2 - t.v1;
  const Vec2 q = t.v3 - t.v1;
  return t.v1 + detail::solve2(p, dot(p, p) / 2.0, q, dot(q, q) / 2.0);
}

/// X4: intersection of the altitudes from v1 and v2.
inline Point orthocenter(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kCollinearVertices);
  const Vec2 p = t.v2 - t.v1;
  const Vec2 q = t.v3 - t.v1;
  // (H − v1)·(v3 − v2) = 0 and (H − v2)·(v3 − v1) = 0, with H relative to v1.
  const Vec2 n1 = q - p;
  const Vec2 n2 = q;
  return t.v1 + detail::solve2(n1, 0.0, n2, dot(p, q));
}

/// X_ρ = (1 − ρ) X2 + ρ X4.
inline Point x_rho(const Triangle& t, double rho) {
  const Point g = barycenter(t);
  const Point h = orthocenter(t);
  return (1.0 - rho) * g + rho * h;
}

/// Point with (unnormalized) barycentric weights w over (v1, v2, v3).
inline Point from_barycentrics(const Triangle& t, double w1, double w2, double w3) {
  const double s = w1 + w2 + w3;
  return (w1 * t.v1 + w2 * t.v2 + w3 * t.v3) / s;
}

/// X1, barycentrics (a : b : c).
inline Point incenter(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  return from_barycentrics(t, s.a, s.b, s.c);
}

/// X8, barycentrics (s−a : s−b : s−c).
inline Point nagel_point(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  const double h = (s.a + s.b + s.c) / 2.0;
  return from_barycentrics(t, h - s.a, h - s.b, h - s.c);
}

/// X10, barycentrics (b+c : c+a : a+b).
inline Point spieker_center(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  return from_barycentrics(t, s.b + s.c, s.c + s.a, s.a + s.b);
}

/// X6, barycentrics (a² : b² : c²).
inline Point symmedian_point(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  return from_barycentrics(t, s.a * s.a, s.b * s.b, s.c * s.c);
}

/// X7, barycentrics (1/(s−a) : 1/(s−b) : 1/(s−c)).
inline Point gergonne_point(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  const double h = (s.a + s.b + s.c) / 2.0;
  return from_barycentrics(t, 1.0 / (h - s.a), 1.0 / (h - s.b), 1.0 / (h - s.c));
}

/// X9, barycentrics (a(s−a) : b(s−b) : c(s−c)).
inline Point mittenpunkt(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  const double h = (s.a + s.b + s.c) / 2.0;
  return from_barycentrics(t, s.a * (h - s.a), s.b * (h - s.b), s.c * (h - s.c));
}

/// X145, anticomplement of X8: barycentrics (b+c−3a : c+a−3b : a+b−3c).
inline Point x145(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  return from_barycentrics(t, s.b + s.c - 3.0 * s.a, s.c + s.a - 3.0 * s.b, s.a + s.b - 3.0 * s.c);
}

/// X551, barycentrics (4a+b+c : a+4b+c : a+b+4c).
inline Point x551(const Triangle& t) {
  detail::require_nondegenerate(t, ErrorKind::kDegenerateTriangle);
  const SideLengths s = side_lengths(t);
  return from_barycentrics(t, 4.0 * s.a + s.b + s.c, s.a + 4.0 * s.b + s.c, s.a + s.b + 4.0 * s.c);
}

/// α with P = (1 − α) X1 + α X2. Throws when P is off the Nagel line.
inline double nagel_line_parameter(const Triangle& t, Point p,
                                   double tol = kDefaultTolerances.nagel_line) {
  const Point x1 = incenter(t);
  const Point x2 = barycenter(t);
  const Vec2 d = x2 - x1;
  const double diameter = longest_side(t);
  if (norm(d) < 1e-14 * diameter) {
    throw GeometryError(ErrorKind::kDegenerateTriangle, "X1 = X2 (equilateral); Nagel line undefined");
  }
  if (std::abs(cross(d, p - x1)) / norm(d) > tol * diameter) {
    throw GeometryError(ErrorKind::kNotOnNagelLine, "point is not collinear with X1, X2");
  }
  return dot(p - x1, d) / dot(d, d);
}

struct RhoEntry {
  int k;  // Kimberling index
  double rho;
};

// Euler-line centers at a fixed ρ, in order of increasing ρ.
inline constexpr std::array<RhoEntry, 16> kRhoTable{{
    {20, -2.0},     {550, -1.25}, {376, -1.0},  {548, -0.875}, {3, -0.5},   {549, -0.25},
    {631, -0.2},    {140, -0.125}, {632, -0.05}, {2, 0.0},      {547, 0.125}, {5, 0.25},
    {381, 0.5},     {546, 0.625}, {4, 1.0},     {382, 2.5},
}};

inline std::span<const RhoEntry> rho_table() { return kRhoTable; }

inline std::optional<double> rho_for(int k) {
  for (const RhoEntry& e : kRhoTable) {
    if (e.k == k) return e.rho;
  }
  return std::nullopt;
}

}  // namespace ellipse_loci
