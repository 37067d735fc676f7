// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Lines traced by O_ρ: L_∥ over parallel chords, L_ρ over ρ.

#pragma once

#include <cmath>

#include "ellipse_loci/core.hpp"
#include "ellipse_loci/locus.hpp"

namespace ellipse_loci {

struct ParallelLine {
  Line line;
  Slope slope;
  /// (a² + 3b²)ρ + 2a² = 0: the slope formula has a zero denominator; the line is x = 0.
  bool slope_coefficient_undefined = false;
};

/// L_∥ through O with direction (K cos(t0/2)/a, L sin(t0/2)/b),
/// slope (a/b)·((3a²+b²)ρ + 2b²)/((a²+3b²)ρ + 2a²)·tan(t0/2).
inline ParallelLine line_parallel(const Ellipse& e, double t0, double rho) {
  const double k = detail::k_coef(e, rho);
  const double l = detail::l_coef(e, rho);
  const double half = t0 / 2.0;
  const Vec2 dir{k * std::cos(half) / e.a(), l * std::sin(half) / e.b()};
  const double scale = e.a() * e.a() / e.b();
  if (norm(dir) < 1e-14 * scale) {
    throw GeometryError(ErrorKind::kUndefined, "L_parallel direction vanishes");
  }
  ParallelLine out{Line::through({0.0, 0.0}, dir), Slope::vertical(), false};
  out.slope_coefficient_undefined = std::abs(k) < 1e-14 * e.a() * e.a();
  const bool vertical = out.slope_coefficient_undefined || angles_equal(t0, kPi) || angles_equal(t0, -kPi);
  if (!vertical) {
    out.slope = Slope::finite((e.a() / e.b()) * (l / k) * std::tan(half));
  }
  return out;
}

// p(ρ) = base + ρ·direction.
struct ParamLine {
  Point base;
  Vec2 direction;
  /// Direction vanishes: the whole line is the single point `base`.
  bool collapsed = false;

  Point at(double rho) const { return base + rho * direction; }
  Line line() const {
    if (collapsed) throw GeometryError(ErrorKind::kUndefined, "collapsed line has no direction");
    return Line::through(base, direction);
  }
};

/// L_ρ: base [a(cos t1 + cos t2)/3, b(sin t1 + sin t2)/3] and direction
/// cos((t1−t2)/2)·[(a²+3b²)cos(t0/2)/(3a), (3a²+b²)sin(t0/2)/(3b)].
inline ParamLine line_rho(const Ellipse& e, const TriangleConfig& cfg) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double half = cfg.t0() / 2.0;
  const double ch = std::cos((cfg.t1() - cfg.t2()) / 2.0);
  ParamLine out;
  out.base = {e.a() * detail::sum_cos(cfg) / 3.0, e.b() * detail::sum_sin(cfg) / 3.0};
  out.direction = {ch * (a2 + 3.0 * b2) * std::cos(half) / (3.0 * e.a()),
                   ch * (3.0 * a2 + b2) * std::sin(half) / (3.0 * e.b())};
  out.collapsed = cfg.antipodal();
  if (out.collapsed) out.direction = {0.0, 0.0};
  return out;
}

/// slope(L_ρ)·slope(V1V2) = −(3a² + b²)/(a² + 3b²).
inline double slope_product(const Ellipse& e) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  return -(3.0 * a2 + b2) / (a2 + 3.0 * b2);
}

/// ρ with O_ρ on V1V2: 2a²b² / (3(b⁴−a⁴) cos t0 + 2a²b² + 3a⁴ + 3b⁴).
/// The denominator is at least 2a²b² + 6b⁴.
inline double rho_on_chord(const Ellipse& e, const TriangleConfig& cfg) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double a4 = a2 * a2;
  const double b4 = b2 * b2;
  return 2.0 * a2 * b2 / (3.0 * (b4 - a4) * cfg.z() + 2.0 * a2 * b2 + 3.0 * a4 + 3.0 * b4);
}

}  // namespace ellipse_loci
