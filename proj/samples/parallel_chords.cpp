// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Slides V1V2 over parallel chords and shows that only the locus center moves.

#include <cstdio>

#include "ellipse_loci/ellipse_loci.hpp"

int main() {
  namespace el = ellipse_loci;
  const el::Ellipse e(3.0, 2.0);
  const double t0 = 1.0;
  const double rho = 1.0;
  const el::Line lp = el::line_parallel(e, t0, rho).line;
  for (int i = 0; i < 6; ++i) {
    const double t1 = t0 / 2.0 + el::kPi * (i + 0.5) / 6.0;
    const el::EllipseGeometry g = el::xrho_geometry(e, el::TriangleConfig(t1, t0 - t1), rho);
    std::printf("t1=%.4f  center=(%+.6f, %+.6f)  off-line=%.1e  axes=%.9f x %.9f\n", t1, g.center.x, g.center.y,
                lp.distance(g.center), g.semi_major, g.semi_minor);
  }
}
