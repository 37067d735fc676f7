// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Prints the X_rho locus geometry for a few rho with the chord V1V2 pinned.

#include <cstdio>

#include "ellipse_loci/ellipse_loci.hpp"

int main() {
  namespace el = ellipse_loci;
  const el::Ellipse e(2.0, 1.0);
  const el::TriangleConfig cfg(0.3, 2.1);
  for (const double rho : {0.0, 0.25, 0.5, 1.0}) {
    const el::EllipseGeometry g = el::xrho_geometry(e, cfg, rho);
    std::printf("rho=%5.2f  center=(%+.6f, %+.6f)  axes=%.6f x %.6f  rotation=%+.6f  %s\n", rho, g.center.x,
                g.center.y, g.semi_major, g.semi_minor, g.rotation, el::to_string(el::classify_locus(g, e)));
  }
  try {
    const el::AnnihilatingRho r = el::annihilating_rho(e, cfg.t0());
    std::printf("circle at rho=%.12f\n", r.rho);
  } catch (const el::GeometryError& ex) {
    std::printf("no circular member: %s\n", ex.what());
  }
}
