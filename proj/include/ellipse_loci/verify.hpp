// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Property catalogue run by `ellipse-locus verify`. Every check compares a closed
// form against an oracle (construction, fit, quadrature or numeric envelope).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/envelopes.hpp"
#include "ellipse_loci/focal.hpp"
#include "ellipse_loci/lines.hpp"
#include "ellipse_loci/locus.hpp"
#include "ellipse_loci/oracle.hpp"
#include "ellipse_loci/triangle_centers.hpp"

namespace ellipse_loci {

enum class Bound { kAtMost, kAtLeast };

struct CheckResult {
  std::string check_id;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  /// kAtLeast: the residual is a separation that must exceed the tolerance.
  Bound bound = Bound::kAtMost;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  /// Perturbs a20 of the closed-form implicit conic by 1e−3 (relative).
  bool inject_fault = false;
};

class VerifyContext {
 public:
  explicit VerifyContext(const VerifyOptions& opt, const std::string& id) : opt_(opt) {
    // Per-check stream, so subsets reproduce the full run.
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : id) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
    rng_.seed(opt.seed ^ h);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return uniform(0.0, kTwoPi); }
  bool fault() const { return opt_.inject_fault; }

  /// xrho_implicit, with the optional fault applied.
  Conic implicit(const Ellipse& e, const TriangleConfig& cfg, double rho) const {
    Conic c = xrho_implicit(e, cfg, rho);
    if (opt_.inject_fault) c.a20 *= 1.0 + 1e-3;
    return c;
  }

  /// Random (t1, t2) with |t1 − t2| mod 2π at least `sep`.
  TriangleConfig random_config(double sep = 0.2) {
    for (;;) {
      const double t1 = angle();
      const double t2 = angle();
      if (std::abs(std::remainder(t1 - t2, kTwoPi)) > sep) return {t1, t2};
    }
  }

  /// Random chord with t1 + t2 = t0.
  TriangleConfig config_with_t0(double t0, double sep = 0.2) {
    for (;;) {
      const double t1 = angle();
      const double t2 = t0 - t1;
      if (std::abs(std::remainder(t1 - t2, kTwoPi)) > sep) return {t1, t2};
    }
  }

 private:
  VerifyOptions opt_;
  std::mt19937_64 rng_;
};

namespace detail {

inline std::vector<double> ratio_grid() { return {1.0, 1.2, 2.0, 3.0, std::sqrt(3.0)}; }
inline std::vector<double> rho_grid() { return {-2.0, -0.5, -0.2, 0.0, 0.25, 0.5, 1.0, 2.5}; }

inline std::vector<TriangleConfig> config_grid(VerifyContext& ctx) {
  std::vector<TriangleConfig> out{{0.5, 1.2}, {0.3, kPi - 0.3}, {0.4, -0.4}, {0.2, 0.2 + kPi},
                                  {1.0, 2.5}, {-0.7, 2.0},      {2.2, 4.1}};
  out.push_back(ctx.random_config());
  return out;
}

/// Sweep parameters kept at least 0.05 away from the pinned vertices.
inline std::vector<double> sweep(const TriangleConfig& cfg, int n, double phase = 0.37) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * (i + phase) / n;
    if (std::abs(std::remainder(t - cfg.t1(), kTwoPi)) < 0.05) continue;
    if (std::abs(std::remainder(t - cfg.t2(), kTwoPi)) < 0.05) continue;
    out.push_back(t);
  }
  return out;
}

inline std::vector<Point> sample_xrho(const Ellipse& e, const TriangleConfig& cfg, double rho, int n) {
  std::vector<Point> pts;
  for (double t : sweep(cfg, n)) pts.push_back(x_rho(make_triangle(e, cfg, t).triangle, rho));
  return pts;
}

// |F(p)| against the size of F's terms at length scale L. Pointwise scaling breaks down on
// double lines, where every term vanishes together.
inline double relative_implicit_residual(const Conic& c, Point p, double length) {
  const double scale = (std::abs(c.a20) + 2.0 * std::abs(c.a11) + std::abs(c.a02)) * length * length +
                       2.0 * (std::abs(c.a10) + std::abs(c.a01)) * length + std::abs(c.a00);
  return scale > 0.0 ? std::abs(c(p)) / scale : 0.0;
}

inline double relative_spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double m = std::max(std::abs(*lo), std::abs(*hi));
  return m > 0.0 ? (*hi - *lo) / m : 0.0;
}

/// Is p on the ellipse center + M(cos, sin)? Returns a length residual.
inline double on_param_ellipse(Point p, Point center, const LocusMatrix& m) {
  const Mat2 mm{m.m_cos.x, m.m_sin.x, m.m_cos.y, m.m_sin.y};
  const Vec2 cs = mm.inverse() * (p - center);
  const double r = norm(cs);
  return r > 0.0 ? distance(p, center + mm * (cs / r)) : norm(m.m_cos) + norm(m.m_sin);
}

inline CheckResult finish(std::string id, std::string params, double residual, double tol,
                          Bound bound = Bound::kAtMost) {
  CheckResult r{std::move(id), std::move(params), residual, tol, bound, false};
  r.pass = std::isfinite(residual) && (bound == Bound::kAtMost ? residual < tol : residual > tol);
  return r;
}

}  // namespace detail

// ---- core-ellipse and triangle-centers ----

inline CheckResult check_chord_slope(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TriangleConfig c1 = ctx.random_config();
    const TriangleConfig c2 = ctx.config_with_t0(c1.t0());
    const Vec2 d1 = boundary_point(e, c1.t2()) - boundary_point(e, c1.t1());
    const Vec2 d2 = boundary_point(e, c2.t2()) - boundary_point(e, c2.t1());
    worst = std::max(worst, std::abs(cross(d1 / norm(d1), d2 / norm(d2))));
    worst = std::max(worst, std::abs(cross(d1 / norm(d1), chord_direction(e, c1))));
  }
  return detail::finish("chord-slope-parallel", "a=2,b=1,n=1000", worst, 1e-12);
}

inline CheckResult check_perp_bisector(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 200; ++i) {
      const TriangleConfig cfg = ctx.random_config();
      const Point v1 = boundary_point(e, cfg.t1());
      const Point v2 = boundary_point(e, cfg.t2());
      const Line l = perp_bisector(e, cfg).line;
      worst = std::max(worst, l.distance(midpoint(v1, v2)) / e.a());
      worst = std::max(worst, std::abs(dot(l.direction(), (v2 - v1) / norm(v2 - v1))));
    }
  }
  return detail::finish("perp-bisector-midpoint", "a/b grid,n=200", worst, 1e-12);
}

inline CheckResult check_euler_line(VerifyContext& ctx) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Triangle t{{ctx.uniform(-1, 1), ctx.uniform(-1, 1)}, {ctx.uniform(-1, 1), ctx.uniform(-1, 1)},
               {ctx.uniform(-1, 1), ctx.uniform(-1, 1)}};
    if (std::abs(signed_area(t)) < 0.05) continue;
    const double diam = longest_side(t);
    const Point g = barycenter(t);
    const Point o = circumcenter(t);
    const Point h = orthocenter(t);
    // X4 − X2 = −2 (X3 − X2) packs collinearity, ratio and opposite sides.
    worst = std::max(worst, norm((h - g) + 2.0 * (o - g)) / diam);
  }
  return detail::finish("euler-collinearity", "random triangles,n=1000", worst, 1e-10);
}

inline CheckResult check_closed_form_construction(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (const TriangleConfig& cfg : detail::config_grid(ctx)) {
      for (double t : detail::sweep(cfg, 16)) {
        const Triangle tri = make_triangle(e, cfg, t).triangle;
        worst = std::max(worst, distance(orthocenter(tri), x4_parametric(e, cfg, t)) / e.a());
        worst = std::max(worst, distance(circumcenter(tri), x3_parametric(e, cfg, t)) / e.a());
        for (double rho : detail::rho_grid()) {
          worst = std::max(worst, distance(x_rho(tri, rho), xrho_point(e, cfg, rho, t)) / e.a());
        }
      }
    }
  }
  return detail::finish("closed-form-construction", "5 a/b x 8 cfg x 8 rho x 16 t", worst, 1e-10);
}

inline CheckResult check_rho_table(VerifyContext&) {
  static constexpr std::array<RhoEntry, 16> kExpected{{
      {20, -2.0}, {550, -1.25}, {376, -1.0}, {548, -0.875}, {3, -0.5}, {549, -0.25}, {631, -0.2}, {140, -0.125},
      {632, -0.05}, {2, 0.0}, {547, 0.125}, {5, 0.25}, {381, 0.5}, {546, 0.625}, {4, 1.0}, {382, 2.5},
  }};
  double worst = rho_table().size() == kExpected.size() ? 0.0 : 1.0;
  for (const RhoEntry& r : kExpected) {
    const auto v = rho_for(r.k);
    worst = std::max(worst, v ? std::abs(*v - r.rho) : 1.0);
  }
  return detail::finish("rho-table", "16 entries, exact", worst, std::numeric_limits<double>::min());
}

inline CheckResult check_boundary_implicit(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 500; ++i) worst = std::max(worst, std::abs(e.implicit(boundary_point(e, ctx.angle()))));
  }
  return detail::finish("boundary-implicit", "a/b grid x 500 s", worst, 1e-14);
}

inline CheckResult check_xrho_affine(VerifyContext& ctx) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t{{ctx.uniform(-1, 1), ctx.uniform(-1, 1)}, {ctx.uniform(-1, 1), ctx.uniform(-1, 1)},
                     {ctx.uniform(-1, 1), ctx.uniform(-1, 1)}};
    if (std::abs(signed_area(t)) < 0.05) continue;
    const double r1 = ctx.uniform(-3, 3);
    const double r2 = ctx.uniform(-3, 3);
    const Point m = midpoint(x_rho(t, r1), x_rho(t, r2));
    worst = std::max(worst, distance(x_rho(t, (r1 + r2) / 2.0), m) / longest_side(t));
  }
  return detail::finish("xrho-affine", "random triangles, rho in [-3,3]", worst, 1e-13);
}

// ---- locus-conic ----

inline CheckResult check_implicit_consistency(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (const TriangleConfig& cfg : detail::config_grid(ctx)) {
      for (double rho : detail::rho_grid()) {
        const Conic c = ctx.implicit(e, cfg, rho);
        const Point o = xrho_center(e, cfg, rho);
        for (const Point& p : detail::sample_xrho(e, cfg, rho, 16)) {
          worst = std::max(worst, detail::relative_implicit_residual(c, p - o, e.a()));
        }
      }
    }
  }
  return detail::finish("implicit-consistency", "5 a/b x 8 cfg x 8 rho x 16 t", worst, 1e-8);
}

inline CheckResult check_conic_fit(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (const TriangleConfig& cfg : detail::config_grid(ctx)) {
      for (double rho : detail::rho_grid()) {
        if (rho == -0.5) continue;  // segment: fit is a pencil
        const FitReport fit = fit_conic(detail::sample_xrho(e, cfg, rho, 24));
        const Conic expected = ctx.implicit(e, cfg, rho).translated(xrho_center(e, cfg, rho));
        worst = std::max(worst, 1.0 - coefficient_cosine(fit.conic, expected));
      }
    }
  }
  return detail::finish("conic-fit-equivalence", "5 a/b x 8 cfg x 7 rho, 24 samples", worst, 1e-9);
}

namespace detail {

/// C ∘ T for T(p) = M p + t, via the homogeneous matrix Hᵀ A H.
inline Conic pull_back(const Conic& c, double m00, double m01, double m10, double m11, Vec2 t) {
  Eigen::Matrix3d a;
  a << c.a20, c.a11, c.a10, c.a11, c.a02, c.a01, c.a10, c.a01, c.a00;
  Eigen::Matrix3d h;
  h << m00, m01, t.x, m10, m11, t.y, 0.0, 0.0, 1.0;
  const Eigen::Matrix3d q = h.transpose() * a * h;
  return {q(0, 0), q(0, 1), q(1, 1), q(0, 2), q(1, 2), q(2, 2)};
}

}  // namespace detail

inline CheckResult check_fit_equivariance(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TriangleConfig cfg = ctx.random_config();
    const std::vector<Point> pts = detail::sample_xrho(e, cfg, ctx.uniform(-1.0, 2.0), 24);
    const double th = ctx.angle();
    const double sc = ctx.uniform(0.2, 5.0);
    const Vec2 off{ctx.uniform(-10, 10), ctx.uniform(-10, 10)};
    const double m00 = sc * std::cos(th);
    const double m01 = -sc * std::sin(th);
    const double m10 = sc * std::sin(th);
    const double m11 = sc * std::cos(th);
    std::vector<Point> moved;
    for (const Point& p : pts) moved.push_back({m00 * p.x + m01 * p.y + off.x, m10 * p.x + m11 * p.y + off.y});
    const Conic direct = fit_conic(pts).conic;
    const Conic back = detail::pull_back(fit_conic(moved).conic, m00, m01, m10, m11, off);
    worst = std::max(worst, 1.0 - std::abs(coefficient_cosine(direct, back)));
  }
  return detail::finish("fit-equivariance", "a=2,b=1, 20 random similarities", worst, 1e-9);
}

namespace detail {

inline std::vector<double> invariance_rhos() { return {-2.0, -0.2, 0.0, 0.25, 0.5, 1.0, 2.5}; }
inline std::vector<double> invariance_t0s() { return {0.3, 1.0, 2.0, kPi, 4.4}; }

}  // namespace detail

inline CheckResult check_ratio_invariance(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t0 : detail::invariance_t0s()) {
    for (double rho : detail::invariance_rhos()) {
      std::vector<double> ratios;
      for (int i = 0; i < 20; ++i) {
        const TriangleConfig cfg = ctx.config_with_t0(t0);
        ratios.push_back(axis_geometry(ctx.implicit(e, cfg, rho)).aspect_ratio());
      }
      worst = std::max(worst, detail::relative_spread(ratios));
    }
  }
  return detail::finish("ratio-invariance", "a=2,b=1, 5 t0 x 7 rho x 20 chords", worst, 1e-9);
}

inline CheckResult check_product_invariance(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t0 : detail::invariance_t0s()) {
    for (double rho : detail::invariance_rhos()) {
      std::vector<double> products;
      for (int i = 0; i < 20; ++i) {
        const TriangleConfig cfg = ctx.config_with_t0(t0);
        const double p = axis_geometry(ctx.implicit(e, cfg, rho)).axis_product();
        const double ref = axis_product(e, cfg, rho);
        products.push_back(p);
        worst = std::max(worst, std::abs(p - ref) / ref);
      }
      worst = std::max(worst, detail::relative_spread(products));
    }
  }
  return detail::finish("product-invariance", "a=2,b=1, 5 t0 x 7 rho x 20 chords", worst, 1e-9);
}

inline CheckResult check_ratio_special(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  const std::vector<std::pair<double, double>> special{{0.0, 2.0}, {1.0, 2.0}, {0.25, 1.25}};
  double worst = 0.0;
  for (const auto& [rho, expected] : special) {
    for (int i = 0; i < 20; ++i) {
      const TriangleConfig cfg = ctx.random_config();
      worst = std::max(worst, std::abs(axis_geometry(ctx.implicit(e, cfg, rho)).aspect_ratio() - expected));
    }
  }
  return detail::finish("ratio-special-rho", "a=2,b=1, rho in {0,1/4,1}, 20 chords", worst, 1e-10);
}

inline CheckResult check_ratio_rho_dependence(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double least = std::numeric_limits<double>::infinity();
  std::vector<TriangleConfig> cfgs;
  for (int i = 0; i < 20; ++i) cfgs.push_back(ctx.random_config());
  for (double rho : {0.1, 0.5, -1.0}) {
    std::vector<double> ratios;
    for (const TriangleConfig& cfg : cfgs) ratios.push_back(xrho_geometry(e, cfg, rho).aspect_ratio());
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    least = std::min(least, *hi - *lo);
  }
  return detail::finish("ratio-rho-dependence", "a=2,b=1, rho in {0.1,0.5,-1}: spread", least, 1e-3,
                        Bound::kAtLeast);
}

inline CheckResult check_circle_loci(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (ChordOrientation o : {ChordOrientation::kHorizontal, ChordOrientation::kVertical}) {
    for (const CircleBranch& br : circle_rhos(e, o)) {
      for (int i = 0; i < 5; ++i) {
        const double t1 = ctx.uniform(0.3, 2.8);
        const TriangleConfig cfg = o == ChordOrientation::kHorizontal ? TriangleConfig(t1, kPi - t1)
                                                                      : TriangleConfig(t1, -t1);
        const EllipseGeometry g = axis_geometry(fit_conic(detail::sample_xrho(e, cfg, br.rho, 24)).conic);
        worst = std::max(worst, std::abs(g.semi_major - br.radius));
        worst = std::max(worst, std::abs(g.semi_minor - br.radius));
        worst = std::max(worst, distance(g.center, br.center(t1)));
      }
    }
  }
  return detail::finish("circle-loci", "a=2,b=1, 4 branches x 5 chords, fitted", worst, 1e-9);
}

inline CheckResult check_no_slanted_circle(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double least = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    TriangleConfig cfg = ctx.random_config();
    while (std::abs(std::sin(cfg.t0())) < 0.2) cfg = ctx.random_config();
    for (int k = 0; k < 2000; ++k) {
      const double rho = -5.0 + 10.0 * (k + 0.5) / 2000.0;
      least = std::min(least, std::abs(xrho_geometry(e, cfg, rho).aspect_ratio() - 1.0));
    }
  }
  return detail::finish("no-slanted-circle", "a=2,b=1, 10 chords x 2000 rho: min |ratio-1|", least, 1e-3,
                        Bound::kAtLeast);
}

namespace detail {

/// Circumcenters of T(t) extremal along the X3 segment direction, by golden section.
inline Segment x3_extremes(const Ellipse& e, const TriangleConfig& cfg, const X3Segment& seg) {
  const Vec2 u = (seg.segment.q - seg.segment.p) / seg.segment.length();
  auto along = [&](double t, double sign) {
    if (angles_equal(t, cfg.t1(), 1e-3) || angles_equal(t, cfg.t2(), 1e-3)) return 1e300;
    return sign * dot(circumcenter(make_triangle(e, cfg, t).triangle) - seg.midpoint, u);
  };
  double tmin = 0.0;
  double tmax = 0.0;
  minimize_over_parameter([&](double t) { return along(t, 1.0); }, 0.0, kTwoPi, 720, &tmin);
  minimize_over_parameter([&](double t) { return along(t, -1.0); }, 0.0, kTwoPi, 720, &tmax);
  return {circumcenter(make_triangle(e, cfg, tmin).triangle), circumcenter(make_triangle(e, cfg, tmax).triangle)};
}

}  // namespace detail

inline CheckResult check_x3_segment(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  std::vector<TriangleConfig> cfgs{{0.5, 1.2}, {0.4, -0.4}, {0.3, kPi - 0.3}};
  for (int i = 0; i < 5; ++i) cfgs.push_back(ctx.random_config());
  for (const TriangleConfig& cfg : cfgs) {
    const X3Segment seg = x3_segment(e, cfg);
    const Line bis = perp_bisector(e, cfg).line;
    worst = std::max(worst, bis.distance(seg.segment.p));
    worst = std::max(worst, bis.distance(seg.segment.q));
    worst = std::max(worst, std::abs(seg.segment.length() - seg.length));
    worst = std::max(worst, distance(midpoint(seg.segment.p, seg.segment.q), seg.midpoint));
    const Segment ext = detail::x3_extremes(e, cfg, seg);
    worst = std::max(worst, distance(ext.p, seg.segment.p));
    worst = std::max(worst, distance(ext.q, seg.segment.q));
    const Vec2 u = (seg.segment.q - seg.segment.p) / seg.segment.length();
    for (double t : detail::sweep(cfg, 64)) {
      const Point x3 = circumcenter(make_triangle(e, cfg, t).triangle);
      const double along = std::abs(dot(x3 - seg.midpoint, u)) - seg.length / 2.0;
      worst = std::max({worst, std::abs(cross(u, x3 - seg.midpoint)), along});
    }
  }
  return detail::finish("x3-segment", "a=2,b=1, 8 chords", worst, 1e-9);
}

inline CheckResult check_x3_length_extrema(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double t0 = kTwoPi * k / 64.0;
    const TriangleConfig cfg(t0 / 2.0 + 0.6, t0 / 2.0 - 0.6);
    const X3Segment seg = x3_segment(e, cfg);
    const double constructed = detail::x3_extremes(e, cfg, seg).length();
    lo = std::min(lo, constructed);
    hi = std::max(hi, constructed);
  }
  const double worst = std::max(std::abs(lo - e.c2() / e.a()), std::abs(hi - e.c2() / e.b()));
  return detail::finish("x3-length-extrema", "a=2,b=1, 64 t0, constructed lengths", worst, 1e-9);
}

// ---- lines-translation ----

inline CheckResult check_rigid_translation(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t0 : {0.7, 2.0, kPi, 5.0}) {
    for (double rho : {0.0, 0.3, 1.0, 2.5}) {
      const Line lp = line_parallel(e, t0, rho).line;
      const TriangleConfig ref = ctx.config_with_t0(t0);
      const EllipseGeometry g0 = xrho_geometry(e, ref, rho);
      for (int i = 0; i < 20; ++i) {
        const TriangleConfig cfg = ctx.config_with_t0(t0);
        const EllipseGeometry g = xrho_geometry(e, cfg, rho);
        worst = std::max({worst, std::abs(g.semi_major - g0.semi_major), std::abs(g.semi_minor - g0.semi_minor),
                          std::abs(std::remainder(g.rotation - g0.rotation, kPi)), lp.distance(g.center) / e.a()});
      }
    }
  }
  return detail::finish("rigid-translation", "a=2,b=1, 4 t0 x 4 rho x 20 chords", worst, 1e-9);
}

inline CheckResult check_line_parallel_origin(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double t0 = ctx.angle();
      const double rho = ctx.uniform(-3.0, 3.0);
      worst = std::max(worst, std::abs(line_parallel(e, t0, rho).line.C()));
    }
  }
  return detail::finish("line-parallel-origin", "a/b grid x 100", worst, 1e-14);
}

inline CheckResult check_line_rho(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 50; ++i) {
      const TriangleConfig cfg = ctx.random_config();
      const ParamLine l = line_rho(e, cfg);
      for (double rho : detail::rho_grid()) {
        worst = std::max(worst, distance(l.at(rho), xrho_center(e, cfg, rho)) / e.a());
      }
    }
    const ParamLine collapsed = line_rho(e, TriangleConfig(0.9, 0.9 + kPi));
    worst = std::max(worst, collapsed.collapsed ? norm(collapsed.base) / e.a() : 1.0);
  }
  return detail::finish("line-rho-centers", "a/b grid x 50 chords x 8 rho + antipodal", worst, 1e-11);
}

inline CheckResult check_line_rho_direction(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 50; ++i) {
      const TriangleConfig c1 = ctx.random_config(0.3);
      const TriangleConfig c2 = ctx.config_with_t0(c1.t0(), 0.3);
      if (c1.antipodal() || c2.antipodal()) continue;
      const Vec2 d1 = line_rho(e, c1).direction;
      const Vec2 d2 = line_rho(e, c2).direction;
      if (std::abs(std::cos((c1.t1() - c1.t2()) / 2.0)) < 0.05 || std::abs(std::cos((c2.t1() - c2.t2()) / 2.0)) < 0.05) {
        continue;  // near-antipodal: direction nearly vanishes
      }
      worst = std::max(worst, std::abs(cross(d1 / norm(d1), d2 / norm(d2))));
    }
  }
  return detail::finish("line-rho-direction", "a/b grid x 50 chord pairs sharing t0", worst, 1e-12);
}

inline CheckResult check_slope_product(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : {1.0, 2.0, std::sqrt(3.0), 3.0}) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 100; ++i) {
      TriangleConfig cfg = ctx.random_config();
      while (std::abs(std::sin(cfg.t0())) < 0.1 || cfg.antipodal()) cfg = ctx.random_config();
      const Vec2 dl = line_rho(e, cfg).direction;
      const Vec2 dc = boundary_point(e, cfg.t2()) - boundary_point(e, cfg.t1());
      const double prod = (dl.y / dl.x) * (dc.y / dc.x);
      worst = std::max(worst, std::abs(prod / slope_product(e) - 1.0));
    }
  }
  return detail::finish("slope-product", "a/b in {1,2,sqrt3,3} x 100 chords", worst, 1e-10);
}

inline CheckResult check_line_rho_origin(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t1 = ctx.uniform(0.1, 1.4);
    for (const TriangleConfig& cfg : {TriangleConfig(t1, -t1), TriangleConfig(t1, kPi - t1)}) {
      worst = std::max(worst, line_rho(e, cfg).line().distance({0.0, 0.0}));
    }
  }
  return detail::finish("line-rho-origin-axis-chords", "a=2,b=1, 40 axis-parallel chords", worst, 1e-12);
}

inline CheckResult check_rho_on_chord(VerifyContext& ctx) {
  double worst = 0.0;
  for (double ab : detail::ratio_grid()) {
    const Ellipse e(ab, 1.0);
    for (int i = 0; i < 100; ++i) {
      const TriangleConfig cfg = ctx.random_config();
      const Point v1 = boundary_point(e, cfg.t1());
      const Line chord = Line::through(v1, boundary_point(e, cfg.t2()) - v1);
      worst = std::max(worst, chord.distance(xrho_center(e, cfg, rho_on_chord(e, cfg))) / e.a());
    }
  }
  return detail::finish("rho-on-chord", "a/b grid x 100 chords", worst, 1e-10);
}

// ---- envelopes ----

inline CheckResult check_deltoid_membership(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.0, 0.7, 2.0}) {
    const ParamCurve d = deltoid(e, t1);
    const LineFamily fam = line_rho_family(e, t1);
    for (int i = 0; i < 64; ++i) {
      worst = std::max(worst, line_family_membership(fam, d(kTwoPi * (i + 0.5) / 64.0), 0.0, kTwoPi) / e.a());
    }
  }
  return detail::finish("deltoid-envelope", "a=2,b=1, t1 in {0,0.7,2}", worst, 1e-8);
}

inline CheckResult check_deltoid_numeric_envelope(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.0, 0.7, 2.0}) {
    const ParamCurve d = deltoid(e, t1);
    const LineFamily fam = line_rho_family(e, t1);
    for (int i = 0; i < 32; ++i) {
      const double t2 = t1 + kTwoPi * (i + 0.3) / 32.0;
      const auto p = line_envelope_point(fam, t2);
      if (!p) {
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      const double r = minimize_over_parameter([&](double u) { return distance(d(u), *p); }, 0.0, kTwoPi);
      worst = std::max(worst, r / e.a());
    }
  }
  return detail::finish("deltoid-numeric-envelope", "a=2,b=1, characteristic points of L_rho", worst, 1e-6);
}

inline int count_speed_zeros(const ParamCurve& c, double scale, int n = 20000) {
  std::vector<double> speed(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) speed[static_cast<std::size_t>(i)] = norm(c.derivative(kTwoPi * i / n));
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const double prev = speed[static_cast<std::size_t>((i + n - 1) % n)];
    const double cur = speed[static_cast<std::size_t>(i)];
    const double next = speed[static_cast<std::size_t>((i + 1) % n)];
    if (cur <= prev && cur < next && cur < 1e-3 * scale) ++count;
  }
  return count;
}

inline CheckResult check_deltoid_cusps(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.0, 0.7, 2.0, 4.0}) {
    worst = std::max(worst, std::abs(count_speed_zeros(deltoid(e, t1), e.a()) - 3.0));
  }
  return detail::finish("deltoid-cusps", "a=2,b=1, |count-3|", worst, 0.5);
}

inline std::vector<double> t1_grid() { return {0.0, 0.4, 0.8, 1.3, 2.1, 2.9, 4.0, 5.5}; }

inline CheckResult check_area_orientation(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.0, 0.7, 2.0}) {
    for (const ParamCurve& c : {deltoid(e, t1), envelope_gamma_t1(e, t1, 0.5), xrho_locus_param(e, {t1, t1 + 1.9}, 1.0)}) {
      const double fwd = curve_area(c);
      worst = std::max(worst, std::abs(fwd + curve_area(c.reversed())) / std::abs(fwd));
    }
  }
  return detail::finish("area-orientation", "reversed traces, 9 curves", worst, 1e-15);
}

inline CheckResult check_area_invariance(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  std::vector<double> deltoid_areas;
  double worst = 0.0;
  for (double t1 : t1_grid()) deltoid_areas.push_back(curve_area(deltoid(e, t1)));
  worst = detail::relative_spread(deltoid_areas);
  for (double rho : {0.0, 0.5, 1.0, -0.5}) {
    std::vector<double> areas;
    for (double t1 : t1_grid()) areas.push_back(curve_area(envelope_gamma_t1(e, t1, rho)));
    worst = std::max(worst, detail::relative_spread(areas));
  }
  return detail::finish("area-invariance", "a=2,b=1, 8 t1", worst, 1e-9);
}

inline CheckResult check_envelope_area(VerifyContext&) {
  double worst = 0.0;
  for (double ab : {1.0, 1.5, 2.0, 3.0}) {
    const Ellipse e(ab, 1.0);
    for (double rho : {-2.0, -0.5, 0.0, 0.5, 1.0, 2.5}) {
      for (double t1 : t1_grid()) {
        const double q = curve_area(envelope_gamma_t1(e, t1, rho));
        const double f = envelope_area(e, rho);
        // The floor handles the zero-area member (a = b, rho = -1/2).
        worst = std::max(worst, std::abs(q - f) / std::max(std::abs(f), 1e-12 * kPi * e.a() * e.b()));
      }
    }
  }
  return detail::finish("envelope-area", "a/b x 6 rho x 8 t1, quadrature", worst, 1e-7);
}

inline CheckResult check_gamma_rho(VerifyContext&) {
  double worst = 0.0;
  for (double ab : {1.0, 2.0, 3.0}) {
    const Ellipse e(ab, 1.0);
    for (double rho : {-2.0, 0.0, 2.0 / 3.0, 1.0, 2.5}) {
      for (double t1 : t1_grid()) {
        const EllipseGeometry g = centers_locus_gamma(e, t1, rho);
        const Conic c = g.to_conic();
        worst = std::max(worst, std::abs(c({0.0, 0.0})));
        for (int i = 0; i < 16; ++i) {
          const double t2 = t1 + kTwoPi * (i + 0.5) / 16.0;
          worst = std::max(worst, std::abs(c(xrho_center(e, TriangleConfig(t1, t2), rho))));
        }
        worst = std::max(worst, std::abs(gamma_prime(e, rho).to_conic()(g.center)));
      }
    }
  }
  return detail::finish("gamma-rho", "O on Gamma_rho, centers on Gamma_rho, O' on Gamma'", worst, 1e-10);
}

inline CheckResult check_envelope_numeric(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double rho : {0.0, 0.5, 1.0}) {
    for (double t1 : {0.5, 2.0}) {
      const ImplicitFamily f = xrho_family(e, t1, rho);
      const ParamCurve g = envelope_gamma_t1(e, t1, rho);
      for (int i = 0; i < 24; ++i) {
        const double t = t1 + kTwoPi * (i + 0.5) / 24.0;
        const Point p = g(t);
        const double gn = norm(detail::grad_fd(f, p, t, 1e-6));
        const double fs = (f(p, t + 1e-5) - f(p, t - 1e-5)) / 2e-5;
        worst = std::max({worst, std::abs(f(p, t)) / gn / e.a(), std::abs(fs) / gn / e.a()});
      }
    }
  }
  return detail::finish("envelope-gamma-numeric", "a=2,b=1, rho in {0,1/2,1}: F and dF/dt2", worst, 1e-7);
}

inline CheckResult check_envelope_oracle(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double rho : {0.0, 0.5, 1.0}) {
    for (double t1 : {0.5, 2.0}) {
      const ImplicitFamily f = xrho_family(e, t1, rho);
      const ParamCurve g = envelope_gamma_t1(e, t1, rho);
      for (int i = 0; i < 24; ++i) {
        const double t = t1 + kTwoPi * (i + 0.5) / 24.0;
        const auto ep = envelope_point(f, t, g(t) + Vec2{0.01, -0.01}, e.a());
        worst = std::max(worst, ep ? distance(ep->p, g(t)) / e.a() : std::numeric_limits<double>::infinity());
      }
    }
  }
  return detail::finish("envelope-gamma-oracle", "a=2,b=1, neighbor intersection at delta=1e-4", worst, 1e-6);
}

inline CheckResult check_inner_envelope(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : t1_grid()) {
    const Point v1 = boundary_point(e, t1);
    for (int i = 0; i < 32; ++i) {
      const TriangleConfig cfg(t1, t1 + kTwoPi * (i + 0.5) / 32.0);
      worst = std::max(worst, detail::on_param_ellipse(v1 / 3.0, xrho_center(e, cfg, 0.0), xrho_matrix(e, cfg, 0.0)));
      worst = std::max(worst, detail::on_param_ellipse(v1, xrho_center(e, cfg, 1.0), xrho_matrix(e, cfg, 1.0)));
    }
  }
  return detail::finish("inner-envelope-points", "a=2,b=1: V1/3 at rho=0, V1 at rho=1", worst, 1e-9);
}

inline CheckResult check_limacon(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.3, 1.0, 1.9, 3.5, 5.2}) {
    const LimaconReport r = limacon_witness(e, t1);
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, r.residual[k] / r.tolerance[k]);
  }
  return detail::finish("limacon-witness", "a=2,b=1, 5 t1, residual/tolerance", worst, 1.0);
}

inline CheckResult check_steiner_hat(VerifyContext&) {
  const Ellipse e(2.0, 1.0);
  double worst = 0.0;
  for (double t1 : {0.0, 1.1, 2.5}) {
    const SteinerHatReport r = steiner_hat_check(e, t1);
    worst = std::max({worst, std::abs(r.area_ratio - 0.25), r.homothety_residual / e.a(), std::abs(r.scale - 0.5)});
  }
  return detail::finish("steiner-hat", "a=2,b=1, t1 in {0,1.1,2.5}", worst, 1e-6);
}

// ---- focal-family ----

inline CheckResult check_focal_implicit(VerifyContext&) {
  const double eq = 2.0 / std::sqrt(3.0);
  double worst = 0.0;
  for (double ab : {1.2, eq * (1.0 - 1e-3), eq * (1.0 + 1e-3), 2.0, 3.0}) {
    const Ellipse e(ab, 1.0);
    const std::vector<std::pair<int, Point (*)(const Triangle&)>> centers{
        {1, incenter}, {2, barycenter}, {8, nagel_point}, {10, spieker_center}};
    for (const auto& [k, f] : centers) {
      const Conic c = focal_locus_implicit(e, k);
      for (int i = 0; i < 200; ++i) {
        const double t = kTwoPi * (i + 0.5) / 200.0;
        worst = std::max(worst, detail::relative_implicit_residual(c, f(focal_triangle(e, t)), e.a()));
      }
    }
  }
  return detail::finish("focal-implicit", "X1,X2,X8,X10 x 5 a/b x 200 t", worst, 1e-9);
}

inline CheckResult check_nagel_constancy(VerifyContext&) {
  double worst = 0.0;
  for (double ab : {1.2, 2.0, 3.0}) {
    const Ellipse e(ab, 1.0);
    for (const char* name : {"X8", "X10", "X145", "X551"}) {
      worst = std::max(worst, nagel_constancy(e, *find_center(name)).alpha_spread);
    }
  }
  return detail::finish("nagel-constancy", "X8,X10,X145,X551 x 3 a/b", worst, 1e-9);
}

inline CheckResult check_scanner(VerifyContext& ctx) {
  const Ellipse e(2.0, 1.0);
  int mismatches = 0;
  auto expect = [&](const CenterFunction& f, FamilyKind fam, const std::optional<TriangleConfig>& cfg,
                    std::initializer_list<LocusClass> ok) {
    for (const ScanOptions& opt : {ScanOptions{48, 0.0}, ScanOptions{96, 0.0}, ScanOptions{48, 0.1}}) {
      const LocusClass c = ellipticity_scan(e, f, fam, cfg, opt).classification;
      if (std::find(ok.begin(), ok.end(), c) == ok.end()) ++mismatches;
    }
  };
  for (const char* name : {"X1", "X2", "X8", "X10", "X145", "X551"}) {
    expect(*find_center(name), FamilyKind::kFocal, std::nullopt, {LocusClass::kEllipse});
  }
  for (const char* name : {"X6", "X7", "X9"}) {
    expect(*find_center(name), FamilyKind::kFocal, std::nullopt, {LocusClass::kNonConic});
  }
  const TriangleConfig cfg = ctx.random_config(0.5);
  for (const RhoEntry& r : rho_table()) {
    if (r.rho == -0.5) {
      expect(xrho_center_function(r.rho, r.k), FamilyKind::kPinned, cfg, {LocusClass::kSegment});
    } else {
      expect(xrho_center_function(r.rho, r.k), FamilyKind::kPinned, cfg, {LocusClass::kEllipse});
    }
  }
  return detail::finish("scanner", "focal X1..X551, probes X6,X7,X9, tabulated X_rho on pinned; 3 grids",
                        mismatches, 0.5);
}

// ---- catalogue ----

struct CheckEntry {
  const char* id;
  std::function<CheckResult(VerifyContext&)> run;
};

inline const std::vector<CheckEntry>& check_catalogue() {
  static const std::vector<CheckEntry> kChecks{
      {"chord-slope-parallel", check_chord_slope},
      {"perp-bisector-midpoint", check_perp_bisector},
      {"euler-collinearity", check_euler_line},
      {"closed-form-construction", check_closed_form_construction},
      {"rho-table", check_rho_table},
      {"boundary-implicit", check_boundary_implicit},
      {"xrho-affine", check_xrho_affine},
      {"implicit-consistency", check_implicit_consistency},
      {"conic-fit-equivalence", check_conic_fit},
      {"fit-equivariance", check_fit_equivariance},
      {"ratio-invariance", check_ratio_invariance},
      {"product-invariance", check_product_invariance},
      {"ratio-special-rho", check_ratio_special},
      {"ratio-rho-dependence", check_ratio_rho_dependence},
      {"circle-loci", check_circle_loci},
      {"no-slanted-circle", check_no_slanted_circle},
      {"x3-segment", check_x3_segment},
      {"x3-length-extrema", check_x3_length_extrema},
      {"rigid-translation", check_rigid_translation},
      {"line-parallel-origin", check_line_parallel_origin},
      {"line-rho-centers", check_line_rho},
      {"line-rho-direction", check_line_rho_direction},
      {"slope-product", check_slope_product},
      {"line-rho-origin-axis-chords", check_line_rho_origin},
      {"rho-on-chord", check_rho_on_chord},
      {"deltoid-envelope", check_deltoid_membership},
      {"deltoid-numeric-envelope", check_deltoid_numeric_envelope},
      {"deltoid-cusps", check_deltoid_cusps},
      {"area-orientation", check_area_orientation},
      {"area-invariance", check_area_invariance},
      {"envelope-area", check_envelope_area},
      {"gamma-rho", check_gamma_rho},
      {"envelope-gamma-numeric", check_envelope_numeric},
      {"envelope-gamma-oracle", check_envelope_oracle},
      {"inner-envelope-points", check_inner_envelope},
      {"limacon-witness", check_limacon},
      {"steiner-hat", check_steiner_hat},
      {"focal-implicit", check_focal_implicit},
      {"nagel-constancy", check_nagel_constancy},
      {"scanner", check_scanner},
  };
  return kChecks;
}

/// Runs the catalogue (or the `only` subset). Unknown ids throw kInvalidConfig.
inline std::vector<CheckResult> run_verify(const VerifyOptions& opt, const std::vector<std::string>& only = {}) {
  for (const std::string& id : only) {
    const auto& cat = check_catalogue();
    if (std::none_of(cat.begin(), cat.end(), [&](const CheckEntry& c) { return id == c.id; })) {
      throw GeometryError(ErrorKind::kInvalidConfig, "unknown check id: " + id);
    }
  }
  std::vector<CheckResult> out;
  for (const CheckEntry& c : check_catalogue()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    VerifyContext ctx(opt, c.id);
    try {
      out.push_back(c.run(ctx));
    } catch (const std::exception& ex) {
      out.push_back({c.id, std::string("exception: ") + ex.what(), std::numeric_limits<double>::infinity(), 0.0,
                     Bound::kAtMost, false});
    }
  }
  return out;
}

}  // namespace ellipse_loci
