// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace ellipse_loci {

// Default thresholds shared by the library, the verifier and the tests.
// Tests may tighten these but never loosen them.
struct Tolerances {
  double angle_equal = 1e-12;          // t ≡ t' (mod 2π)
  double collinear = 1e-12;            // area / longest² below this ⇒ degenerate triangle
  double nagel_line = 1e-9;            // distance to X1X2, relative to diameter
  double conic_classify = 1e-10;       // relative to coefficient norm
  double fit_rank = 1e-10;             // σ5/σ1 below this ⇒ pencil of conics
  double fit_non_conic = 1e-6;         // normalized fit residual above this ⇒ not a conic
  double segment_thinness = 1e-9;      // σmin/σmax of centered samples ⇒ segment
  double point_spread = 1e-12;         // all samples within this·scale ⇒ point
  double annihilation_denominator = 1e-12;  // relative to a⁴
  double closed_curve = 1e-12;
  double envelope_delta = 1e-4;        // neighbour step for the numeric envelope oracle
  double envelope_stationarity = 1e-7; // |∂F/∂s| / |∇F|, relative to a
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace ellipse_loci
