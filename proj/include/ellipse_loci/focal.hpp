// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// The focal family T_f(t) = f1 f2 P(t) and a scanner that classifies the locus
// of an arbitrary center function by conic fitting.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/locus.hpp"
#include "ellipse_loci/oracle.hpp"
#include "ellipse_loci/triangle_centers.hpp"

namespace ellipse_loci {

/// (−c, 0), (c, 0), U(t).
inline Triangle focal_triangle(const Ellipse& e, double t) {
  if (e.is_circle()) throw GeometryError(ErrorKind::kDegenerateTriangle, "foci coincide (a = b)");
  if (angles_equal(t, 0.0) || angles_equal(t, kPi)) {
    throw GeometryError(ErrorKind::kDegenerateTriangle, "P(t) is collinear with the foci");
  }
  return {e.focus1(), e.focus2(), boundary_point(e, t)};
}

/// Implicit locus of X_k, k ∈ {1, 2, 8, 10}, over the focal family, with denominators cleared.
inline Conic focal_locus_implicit(const Ellipse& e, int k) {
  if (e.is_circle()) throw GeometryError(ErrorKind::kPreconditionViolated, "a > b required");
  const double a = e.a();
  const double b = e.b();
  const double c = e.c();
  const double b2 = b * b;
  Conic q;
  switch (k) {
    case 1:  // x²/c² + (a+c)² y²/(b² c²) − 1
      q = {b2, 0.0, (a + c) * (a + c), 0.0, 0.0, -b2 * c * c};
      break;
    case 2:  // 9x²/a² + 9y²/b² − 1
      q = {9.0 * b2, 0.0, 9.0 * a * a, 0.0, 0.0, -a * a * b2};
      break;
    case 8: {  // x²/(a−2c)² + y²(a+c)²/(b²(a−c)²) − 1; a double line x = 0 at a = 2c
      const double m = (a - 2.0 * c) * (a - 2.0 * c);
      const double n = (a - c) * (a - c);
      q = {b2 * n, 0.0, m * (a + c) * (a + c), 0.0, 0.0, -m * b2 * n};
      break;
    }
    case 10: {  // 4x²/(a−c)² + 4(a+c)² y²/(a² b²) − 1
      const double n = (a - c) * (a - c);
      q = {4.0 * a * a * b2, 0.0, 4.0 * (a + c) * (a + c) * n, 0.0, 0.0, -n * a * a * b2};
      break;
    }
    default:
      throw GeometryError(ErrorKind::kPreconditionViolated, "focal loci are known for k in {1, 2, 8, 10}");
  }
  return q.normalized();
}

/// Axes of the same loci, read off the implicit forms. X8 is a segment at a = 2c.
inline EllipseGeometry focal_locus_geometry(const Ellipse& e, int k) {
  (void)focal_locus_implicit(e, k);
  const double a = e.a();
  const double b = e.b();
  const double c = e.c();
  switch (k) {
    case 1: return detail::axis_parallel({}, c, b * c / (a + c));
    case 2: return detail::axis_parallel({}, a / 3.0, b / 3.0);
    case 8: return detail::axis_parallel({}, std::abs(a - 2.0 * c), b * (a - c) / (a + c));
    default: return detail::axis_parallel({}, (a - c) / 2.0, a * b / (2.0 * (a + c)));
  }
}

/// (max − min)/max of the side lengths.
inline double side_length_spread(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  const double hi = std::max({s.a, s.b, s.c});
  const double lo = std::min({s.a, s.b, s.c});
  return (hi - lo) / hi;
}

struct EquilateralReport {
  SideLengths sides;
  double spread;
  bool equilateral;
};

/// At a/b = 2/√3 the focal triangle with P at the top vertex is equilateral.
inline EquilateralReport equilateral_check(const Ellipse& e, double t = kPi / 2.0, double tol = 1e-12) {
  if (std::abs(e.a() / e.b() - 2.0 / std::sqrt(3.0)) > 1e-12) {
    throw GeometryError(ErrorKind::kPreconditionViolated, "a/b = 2/sqrt(3) required");
  }
  const Triangle tri = focal_triangle(e, t);
  const double spread = side_length_spread(tri);
  return {side_lengths(tri), spread, spread < tol};
}

struct CenterFunction {
  std::string name;
  int index = 0;  // Kimberling index, 0 when none
  std::function<Point(const Triangle&)> eval;
};

/// X_ρ = (1−ρ) X2 + ρ X4 as a center function.
inline CenterFunction xrho_center_function(double rho, int k = 0) {
  return {k ? "X" + std::to_string(k) : "X_rho(" + std::to_string(rho) + ")", k,
          [rho](const Triangle& t) { return x_rho(t, rho); }};
}

/// The centers the scanner knows by name.
inline std::vector<CenterFunction> center_registry() {
  return {
      {"X1", 1, incenter},
      {"X2", 2, barycenter},
      {"X3", 3, circumcenter},
      {"X4", 4, orthocenter},
      {"X6", 6, symmedian_point},
      {"X7", 7, gergonne_point},
      {"X8", 8, nagel_point},
      {"X9", 9, mittenpunkt},
      {"X10", 10, spieker_center},
      {"X145", 145, x145},
      {"X551", 551, x551},
  };
}

inline std::optional<CenterFunction> find_center(const std::string& name) {
  for (CenterFunction& f : center_registry()) {
    if (f.name == name) return f;
  }
  if (name.size() > 1 && name[0] == 'X') {
    try {
      const int k = std::stoi(name.substr(1));
      if (const auto rho = rho_for(k)) return xrho_center_function(*rho, k);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

enum class FamilyKind { kPinned, kFocal };

inline const char* to_string(FamilyKind f) { return f == FamilyKind::kPinned ? "pinned" : "focal"; }

enum class LocusClass { kEllipse, kCircle, kSegment, kPoint, kNonConic, kOtherConic };

inline const char* to_string(LocusClass c) {
  switch (c) {
    case LocusClass::kEllipse: return "ellipse";
    case LocusClass::kCircle: return "circle";
    case LocusClass::kSegment: return "segment";
    case LocusClass::kPoint: return "point";
    case LocusClass::kNonConic: return "non-conic";
    case LocusClass::kOtherConic: return "other-conic";
  }
  return "unknown";
}

struct ScanOptions {
  int samples = 48;
  /// Grid t_i = phase + 2π(i + ½)/samples.
  double phase = 0.0;
  Tolerances tol = kDefaultTolerances;
};

struct ScanResult {
  std::string center;
  FamilyKind family = FamilyKind::kPinned;
  LocusClass classification = LocusClass::kNonConic;
  double residual = 0.0;
  /// σ_min/σ_max of the centered sample cloud.
  double thinness = 0.0;
  std::optional<Conic> fitted_conic;
  std::vector<Point> samples;
};

/// Samples of f over a family, skipping degenerate triangles.
inline std::vector<Point> sample_family(const Ellipse& e, const CenterFunction& f, FamilyKind family,
                                        const std::optional<TriangleConfig>& cfg, const ScanOptions& opt) {
  if (family == FamilyKind::kPinned && !cfg) {
    throw GeometryError(ErrorKind::kPreconditionViolated, "pinned family needs (t1, t2)");
  }
  std::vector<Point> pts;
  for (int i = 0; i < opt.samples; ++i) {
    const double t = opt.phase + kTwoPi * (i + 0.5) / opt.samples;
    try {
      Triangle tri;
      if (family == FamilyKind::kFocal) {
        tri = focal_triangle(e, t);
      } else {
        const FamilyTriangle ft = make_triangle(e, *cfg, t);
        if (ft.degenerate) continue;
        tri = ft.triangle;
      }
      const Point p = f.eval(tri);
      if (std::isfinite(p.x) && std::isfinite(p.y)) pts.push_back(p);
    } catch (const GeometryError&) {
    }
  }
  return pts;
}

/// Classifies the locus of f: point and segment by the shape of the sample cloud, then
/// fit residual, then the discriminant of the fitted conic.
inline ScanResult ellipticity_scan(const Ellipse& e, const CenterFunction& f, FamilyKind family,
                                   const std::optional<TriangleConfig>& cfg = std::nullopt,
                                   const ScanOptions& opt = {}) {
  ScanResult out;
  out.center = f.name;
  out.family = family;
  out.classification = LocusClass::kNonConic;
  out.samples = sample_family(e, f, family, cfg, opt);
  const std::vector<Point>& pts = out.samples;
  if (pts.size() < 6) throw GeometryError(ErrorKind::kInsufficientSpread, "fewer than 6 valid samples");

  const PointNormalization nz = normalize_points(pts);
  const double rms = nz.scale > 0.0 ? std::sqrt(2.0) / nz.scale : 0.0;
  if (!(rms > opt.tol.point_spread * e.a())) {
    out.classification = LocusClass::kPoint;
    return out;
  }
  // Singular values of the centered cloud, not covariance eigenvalues: the square root of
  // an eigenvalue ratio bottoms out near 1e-8.
  Eigen::MatrixX2d centered(static_cast<Eigen::Index>(pts.size()), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 d = pts[i] - nz.centroid;
    centered(static_cast<Eigen::Index>(i), 0) = d.x;
    centered(static_cast<Eigen::Index>(i), 1) = d.y;
  }
  const Eigen::JacobiSVD<Eigen::MatrixX2d> svd(centered);
  out.thinness = svd.singularValues()(1) / svd.singularValues()(0);
  if (out.thinness < opt.tol.segment_thinness) {
    out.classification = LocusClass::kSegment;
    return out;
  }

  const FitReport fit = fit_conic(pts, opt.tol.fit_rank, true);
  out.residual = fit.residual;
  out.fitted_conic = fit.conic;
  if (fit.rank_deficient || fit.residual > opt.tol.fit_non_conic) {
    out.classification = LocusClass::kNonConic;
    return out;
  }
  switch (classify_conic(fit.conic, opt.tol.conic_classify)) {
    case ConicClass::kEllipse: out.classification = LocusClass::kEllipse; break;
    case ConicClass::kCircle: out.classification = LocusClass::kCircle; break;
    case ConicClass::kDegenerateEllipse: out.classification = LocusClass::kPoint; break;
    default: out.classification = LocusClass::kOtherConic; break;
  }
  return out;
}

/// One scan per center, run concurrently; results come back in input order.
inline std::vector<ScanResult> scan_centers(const Ellipse& e, const std::vector<CenterFunction>& fs, FamilyKind family,
                                            const std::optional<TriangleConfig>& cfg = std::nullopt,
                                            const ScanOptions& opt = {}) {
  std::vector<std::future<ScanResult>> jobs;
  jobs.reserve(fs.size());
  for (const CenterFunction& f : fs) {
    jobs.push_back(std::async(std::launch::async, [&e, &f, family, &cfg, &opt] {
      return ellipticity_scan(e, f, family, cfg, opt);
    }));
  }
  std::vector<ScanResult> out;
  out.reserve(fs.size());
  for (auto& j : jobs) out.push_back(j.get());  // rethrows the first failure in order
  return out;
}

struct NagelConstancy {
  double alpha_mean = 0.0;
  double alpha_spread = 0.0;  // max − min over the samples
  int samples = 0;
};

/// α(t) with f = (1 − α) X1 + α X2 over the focal family.
inline NagelConstancy nagel_constancy(const Ellipse& e, const CenterFunction& f, int samples = 64) {
  NagelConstancy out;
  double lo = 0.0;
  double hi = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * (i + 0.5) / samples;
    const Triangle tri = focal_triangle(e, t);
    const double alpha = nagel_line_parameter(tri, f.eval(tri));
    lo = out.samples ? std::min(lo, alpha) : alpha;
    hi = out.samples ? std::max(hi, alpha) : alpha;
    out.alpha_mean += alpha;
    ++out.samples;
  }
  out.alpha_mean /= out.samples;
  out.alpha_spread = hi - lo;
  return out;
}

}  // namespace ellipse_loci
