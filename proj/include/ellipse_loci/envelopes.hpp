// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Envelopes of locus families with V1 = U(t1) fixed and V2 = U(t2) sweeping E.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/curve.hpp"
#include "ellipse_loci/lines.hpp"
#include "ellipse_loci/locus.hpp"
#include "ellipse_loci/oracle.hpp"

namespace ellipse_loci {

/// L_ρ over t2 as a line family (the cos((t1−t2)/2) factor is dropped so the member
/// at the antipodal chord stays defined).
inline LineFamily line_rho_family(const Ellipse& e, double t1) {
  return [e, t1](double t2) {
    const double a2 = e.a() * e.a();
    const double b2 = e.b() * e.b();
    const double half = (t1 + t2) / 2.0;
    const Vec2 dir{(a2 + 3.0 * b2) * std::cos(half) / (3.0 * e.a()), (3.0 * a2 + b2) * std::sin(half) / (3.0 * e.b())};
    const Point base{e.a() * (std::cos(t1) + std::cos(t2)) / 3.0, e.b() * (std::sin(t1) + std::sin(t2)) / 3.0};
    const Vec2 n = perpendicular(dir);
    return LineFamilyMember{n, dot(n, base)};
  };
}

namespace detail {

inline Vec2 deltoid_scale(const Ellipse& e) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double k = a2 * a2 - b2 * b2;
  return {k / (2.0 * e.a() * (3.0 * a2 + b2)), k / (2.0 * e.b() * (a2 + 3.0 * b2))};
}

}  // namespace detail

/// Δ_t1(u) = [kx(cos t1 + 2cos u + cos(t1+2u)), −ky(sin t1 + 2 sin u − sin(t1+2u))],
/// kx = (a⁴−b⁴)/(2a(3a²+b²)), ky = (a⁴−b⁴)/(2b(a²+3b²)). Constant O when a = b.
inline ParamCurve deltoid(const Ellipse& e, double t1) {
  const Vec2 k = detail::deltoid_scale(e);
  return ParamCurve::periodic(
      [k, t1](double u) {
        return Point{k.x * (std::cos(t1) + 2.0 * std::cos(u) + std::cos(t1 + 2.0 * u)),
                     -k.y * (std::sin(t1) + 2.0 * std::sin(u) - std::sin(t1 + 2.0 * u))};
      },
      [k, t1](double u) {
        return Vec2{k.x * (-2.0 * std::sin(u) - 2.0 * std::sin(t1 + 2.0 * u)),
                    -k.y * (2.0 * std::cos(u) - 2.0 * std::cos(t1 + 2.0 * u))};
      });
}

/// The three cusp parameters u = (2πk − t1)/3 in [0, 2π).
inline std::array<double, 3> deltoid_cusps(const Ellipse& e, double t1) {
  if (e.is_circle()) throw GeometryError(ErrorKind::kDegenerateCircle, "deltoid degenerates for a = b");
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    double u = std::fmod((kTwoPi * k - t1) / 3.0, kTwoPi);
    if (u < 0.0) u += kTwoPi;
    out[static_cast<std::size_t>(k)] = u;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// π(a⁴−b⁴)² / (ab(3a²+b²)(a²+3b²)).
inline double deltoid_area(const Ellipse& e) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double k = a2 * a2 - b2 * b2;
  return kPi * k * k / (e.a() * e.b() * (3.0 * a2 + b2) * (a2 + 3.0 * b2));
}

/// (a′, b′) = (K/(6a), L/(6b)), signed.
inline Vec2 gamma_axes(const Ellipse& e, double rho) {
  return {detail::k_coef(e, rho) / (6.0 * e.a()), detail::l_coef(e, rho) / (6.0 * e.b())};
}

/// Γ_ρ: locus of O_ρ over t2, centered at O′_ρ = [a′ cos t1, b′ sin t1] with axes (a′, b′).
inline EllipseGeometry centers_locus_gamma(const Ellipse& e, double t1, double rho) {
  const Vec2 ab = gamma_axes(e, rho);
  return detail::axis_parallel({ab.x * std::cos(t1), ab.y * std::sin(t1)}, ab.x, ab.y);
}

/// Γ′_ρ: locus of O′_ρ over t1, concentric with E.
inline EllipseGeometry gamma_prime(const Ellipse& e, double rho) {
  const Vec2 ab = gamma_axes(e, rho);
  return detail::axis_parallel({0.0, 0.0}, ab.x, ab.y);
}

/// Γ_t1(t). The point at t is the characteristic point of the member t2 = t.
inline ParamCurve envelope_gamma_t1(const Ellipse& e, double t1, double rho) {
  const double a = e.a();
  const double b = e.b();
  const double p = a * a + 3.0 * b * b;
  const double q = 3.0 * a * a + b * b;
  const double c2 = e.c2();
  return ParamCurve::periodic(
      [=](double t) {
        const double cx = 2.0 * std::cos(t) + std::cos(t1);
        const double cy = 2.0 * std::sin(t) + std::sin(t1);
        return Point{(p * cx - 3.0 * c2 * std::cos(t1 + 2.0 * t)) * rho / (6.0 * a) + a / 3.0 * cx,
                     (q * cy - 3.0 * c2 * std::sin(t1 + 2.0 * t)) * rho / (6.0 * b) + b / 3.0 * cy};
      },
      [=](double t) {
        const double dx = -2.0 * std::sin(t);
        const double dy = 2.0 * std::cos(t);
        return Vec2{(p * dx + 6.0 * c2 * std::sin(t1 + 2.0 * t)) * rho / (6.0 * a) + a / 3.0 * dx,
                    (q * dy - 6.0 * c2 * std::cos(t1 + 2.0 * t)) * rho / (6.0 * b) + b / 3.0 * dy};
      });
}

/// (π/9)[(15a⁴+2a²b²+15b⁴)ρ²/(2ab) + 2(3a⁴+2a²b²+3b⁴)ρ/(ab) + 4ab].
inline double envelope_area(const Ellipse& e, double rho) {
  const double a = e.a();
  const double b = e.b();
  const double a2 = a * a;
  const double b2 = b * b;
  return kPi / 9.0 *
         ((15.0 * a2 * a2 + 2.0 * a2 * b2 + 15.0 * b2 * b2) * rho * rho / (2.0 * a * b) +
          2.0 * (3.0 * a2 * a2 + 2.0 * a2 * b2 + 3.0 * b2 * b2) * rho / (a * b) + 4.0 * a * b);
}

/// F(p; t2) of the X_ρ locus for the chord (t1, t2), divided by its coefficient norm.
inline ImplicitFamily xrho_family(const Ellipse& e, double t1, double rho) {
  return [e, t1, rho](Point p, double t2) {
    const TriangleConfig cfg(t1, t2);
    const Conic c = xrho_conic(e, cfg, rho);
    return c(p) / c.coefficient_norm();
  };
}

struct LimaconReport {
  AffineMap map;
  double rho;
  /// Max over the t2 grid of: |axis ratio − 1|, distance from S(V1) to the mapped locus,
  /// | |S(O_ρ)| − 1 |, and distance from S(Γ_t1) to the classical construction.
  std::array<double, 4> residual{};
  std::array<double, 4> tolerance{};
  std::array<bool, 4> pass{};

  bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
  int first_failure() const {
    for (int i = 0; i < 4; ++i) {
      if (!pass[static_cast<std::size_t>(i)]) return i + 1;
    }
    return 0;
  }
  /// Throws kAffinityCheckFailed naming the first failing clause.
  void require() const {
    if (const int k = first_failure()) {
      static constexpr std::array<const char*, 4> kClause{
          "(i) mapped loci are circles", "(ii) mapped loci pass through the image of V1",
          "(iii) mapped centers lie on the unit circle", "(iv) mapped envelope matches the limacon"};
      throw GeometryError(ErrorKind::kAffinityCheckFailed,
                          std::string("affinity check failed: clause ") + kClause[static_cast<std::size_t>(k - 1)]);
    }
  }
};

/// Sends Γ_ρ to the unit circle by S(p) = ((p − O′)_x / a′, (p − O′)_y / b′) and checks the
/// limaçon construction. The statement holds at ρ = 1; other ρ serve as negative controls.
inline LimaconReport limacon_witness(const Ellipse& e, double t1, double rho = 1.0, int samples = 64) {
  const Vec2 ab = gamma_axes(e, rho);
  const Point oc{ab.x * std::cos(t1), ab.y * std::sin(t1)};
  const Mat2 lin{1.0 / ab.x, 0.0, 0.0, 1.0 / ab.y};
  LimaconReport rep{AffineMap(lin, -(lin * oc)), rho};
  rep.tolerance = {1e-8, 1e-9 * e.a(), 1e-9, 1e-6};
  const AffineMap& s = rep.map;
  const Point p = s(boundary_point(e, t1));
  const ParamCurve env = envelope_gamma_t1(e, t1, rho);
  for (int i = 0; i < samples; ++i) {
    const double t2 = t1 + kTwoPi * (i + 0.5) / samples;
    const TriangleConfig cfg(t1, t2);
    const LocusMatrix m = xrho_matrix(e, cfg, rho);
    const Point c = s(xrho_center(e, cfg, rho));
    const EllipseGeometry g = ellipse_from_matrix(c, s.apply_linear(m.m_cos), s.apply_linear(m.m_sin));
    rep.residual[0] = std::max(rep.residual[0], std::abs(g.semi_major / g.semi_minor - 1.0));
    // Mapped locus as a circle of the mean radius.
    const double r = (g.semi_major + g.semi_minor) / 2.0;
    rep.residual[1] = std::max(rep.residual[1], std::abs(distance(p, c) - r));
    rep.residual[2] = std::max(rep.residual[2], std::abs(norm(c) - 1.0));
    // Classical envelope point: P reflected across the tangent to C at c.
    const Vec2 n = c / norm(c);
    const Point reflected = p - 2.0 * dot(p - c, n) * n;
    rep.residual[3] = std::max(rep.residual[3], distance(s(env(t2)), reflected));
  }
  for (std::size_t i = 0; i < 4; ++i) rep.pass[i] = rep.residual[i] < rep.tolerance[i];
  return rep;
}

struct SteinerHatReport {
  /// Least-squares λ, τ in bisector_envelope ≈ λ·pedal + τ.
  double scale = 0.0;
  Vec2 translation;
  Point homothety_center;
  double homothety_residual = 0.0;
  double bisector_area = 0.0;
  double pedal_area = 0.0;
  double area_ratio = 0.0;
  /// a = b: both curves collapse to a point and the ratios are meaningless.
  bool degenerate = false;
  std::vector<Point> bisector_envelope;
  std::vector<Point> negative_pedal;
};

namespace detail {

// Characteristic point of n(s)·p = h(s) from analytic derivatives.
inline Point characteristic(Vec2 n, double h, Vec2 nd, double hd) { return solve2(n, h, nd, hd); }

}  // namespace detail

/// Envelope of the perpendicular bisectors of V1 U(t) against the negative pedal curve
/// of E with respect to V1, both sampled at t = t1 + 2π(i + ½)/n.
inline SteinerHatReport steiner_hat_check(const Ellipse& e, double t1, int samples = 4096) {
  SteinerHatReport rep;
  const Point v1 = boundary_point(e, t1);
  for (int i = 0; i < samples; ++i) {
    const double t = t1 + kTwoPi * (i + 0.5) / samples;
    const Point u = boundary_point(e, t);
    const Vec2 ud = boundary_tangent(e, t);
    const Vec2 n = u - v1;
    // Bisector: n·p = n·(V1 + U)/2. Pedal line: n·p = n·U.
    rep.bisector_envelope.push_back(detail::characteristic(
        n, dot(n, v1 + u) / 2.0, ud, dot(ud, v1 + u) / 2.0 + dot(n, ud) / 2.0));
    rep.negative_pedal.push_back(detail::characteristic(n, dot(n, u), ud, dot(ud, u) + dot(n, ud)));
  }
  rep.bisector_area = polygon_area(rep.bisector_envelope);
  rep.pedal_area = polygon_area(rep.negative_pedal);
  if (e.is_circle() || std::abs(rep.pedal_area) < 1e-12 * e.a() * e.a()) {
    rep.degenerate = true;
    return rep;
  }
  rep.area_ratio = rep.bisector_area / rep.pedal_area;

  Point m1{};
  Point m2{};
  for (std::size_t i = 0; i < rep.negative_pedal.size(); ++i) {
    m1 += rep.bisector_envelope[i];
    m2 += rep.negative_pedal[i];
  }
  m1 = m1 / static_cast<double>(samples);
  m2 = m2 / static_cast<double>(samples);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < rep.negative_pedal.size(); ++i) {
    num += dot(rep.bisector_envelope[i] - m1, rep.negative_pedal[i] - m2);
    den += dot(rep.negative_pedal[i] - m2, rep.negative_pedal[i] - m2);
  }
  rep.scale = num / den;
  rep.translation = m1 - rep.scale * m2;
  for (std::size_t i = 0; i < rep.negative_pedal.size(); ++i) {
    const Point fit = rep.scale * rep.negative_pedal[i] + rep.translation;
    rep.homothety_residual = std::max(rep.homothety_residual, distance(fit, rep.bisector_envelope[i]));
  }
  rep.homothety_center = rep.translation / (1.0 - rep.scale);
  return rep;
}

}  // namespace ellipse_loci
