// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance criteria AC1..AC10, one line each. Tolerances are pinned here; a criterion
// backed by a catalogue check also fails if that check's own tolerance is looser.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ellipse_loci/ellipse_loci.hpp"

namespace el = ellipse_loci;

namespace {

int g_failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
  std::printf("%-5s %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Pinned {
  const char* check;
  double tolerance;
};

// Runs catalogue checks and requires each to pass at a tolerance no looser than pinned.
bool catalogue(const std::vector<Pinned>& pins, bool inject_fault, std::string& detail) {
  std::vector<std::string> ids;
  for (const Pinned& p : pins) ids.emplace_back(p.check);
  el::VerifyOptions opt;
  opt.inject_fault = inject_fault;
  const auto results = el::run_verify(opt, ids);
  bool ok = true;
  for (const el::CheckResult& r : results) {
    const auto pin = std::find_if(pins.begin(), pins.end(), [&](const Pinned& p) { return r.check_id == p.check; });
    const bool tol_ok = r.bound == el::Bound::kAtMost ? r.tolerance <= pin->tolerance : r.tolerance >= pin->tolerance;
    ok = ok && r.pass && tol_ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3g(tol %.0e)%s", detail.empty() ? "" : " ", r.check_id.c_str(),
                  r.residual, pin->tolerance, tol_ok ? "" : "[tol loosened]");
    detail += buf;
  }
  return ok;
}

void ac_catalogue(const char* id, const std::vector<Pinned>& pins) {
  std::string detail;
  const bool ok = catalogue(pins, false, detail);
  report(id, ok, detail);
}

void ac7() {
  const el::Ellipse e(2.0, 1.0);
  const std::vector<double> t1s{0.0, 0.4, 0.8, 1.3, 2.1, 2.9, 4.0, 5.5};
  constexpr double kAreaTol = 1e-7;
  constexpr double kSpreadTol = 1e-9;
  auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return (*hi - *lo) / std::max(std::abs(*lo), std::abs(*hi));
  };

  std::vector<double> quad;
  double worst = 0.0;
  for (double t1 : t1s) {
    const double q = std::abs(el::curve_area(el::deltoid(e, t1)));
    quad.push_back(q);
    worst = std::max(worst, std::abs(q - el::deltoid_area(e)) / el::deltoid_area(e));
  }
  const double ds = spread(quad);
  char buf[200];
  std::snprintf(buf, sizeof buf, "deltoid closed form %.12g vs quadrature %.12g: rel err %.3g (tol %.0e), "
                "ratio %.12g; t1 spread %.3g (tol %.0e)",
                el::deltoid_area(e), quad[0], worst, kAreaTol, el::deltoid_area(e) / quad[0], ds, kSpreadTol);
  report("AC7a", worst < kAreaTol && ds < kSpreadTol, buf);

  double gworst = 0.0;
  double gspread = 0.0;
  for (double ab : {1.0, 1.5, 2.0, 3.0}) {
    const el::Ellipse eg(ab, 1.0);
    for (double rho : {-2.0, -0.5, 0.0, 0.5, 1.0, 2.5}) {
      const double f = el::envelope_area(eg, rho);
      if (std::abs(f) < 1e-12 * el::kPi * eg.a() * eg.b()) continue;  // a = b, rho = -1/2: zero area
      std::vector<double> areas;
      for (double t1 : t1s) {
        const double q = el::curve_area(el::envelope_gamma_t1(eg, t1, rho));
        areas.push_back(q);
        gworst = std::max(gworst, std::abs(q - f) / std::abs(f));
      }
      gspread = std::max(gspread, spread(areas));
    }
  }
  std::snprintf(buf, sizeof buf, "envelope area formula vs quadrature: rel err %.3g (tol %.0e); t1 spread %.3g (tol %.0e)",
                gworst, kAreaTol, gspread, kSpreadTol);
  report("AC7b", gworst < kAreaTol && gspread < kSpreadTol, buf);
}

void ac9() {
  std::string detail;
  bool ok = catalogue({{"focal-implicit", 1e-9}, {"scanner", 0.5}}, false, detail);

  const el::Ellipse e8(2.0, std::sqrt(3.0));  // a = 2c
  const el::ScanResult x8 = el::ellipticity_scan(e8, *el::find_center("X8"), el::FamilyKind::kFocal);
  const bool seg = x8.classification == el::LocusClass::kSegment && el::focal_locus_geometry(e8, 8).semi_minor < 1e-12 * e8.a();
  ok = ok && seg;
  detail += std::string(" X8@a=2c:") + el::to_string(x8.classification);

  const el::EquilateralReport eq = el::equilateral_check(el::Ellipse(2.0 / std::sqrt(3.0), 1.0));
  ok = ok && eq.equilateral;
  detail += fmt(" equilateral spread=%.3g", eq.spread);

  const el::ScanResult x6 = el::ellipticity_scan(el::Ellipse(2.0, 1.0), *el::find_center("X6"), el::FamilyKind::kFocal);
  const bool x6_ok = x6.classification == el::LocusClass::kNonConic && x6.residual > 1e-4;
  ok = ok && x6_ok;
  detail += fmt(" X6 residual=%.3g(>1e-4)", x6.residual);

  // Tabulated X_rho centers on a pinned chord; rho = -1/2 (X3) is a segment.
  int mismatches = 0;
  const el::TriangleConfig cfg(0.5, 1.2);
  for (const el::RhoEntry& r : el::rho_table()) {
    const el::ScanResult s = el::ellipticity_scan(el::Ellipse(2.0, 1.0), el::xrho_center_function(r.rho, r.k),
                                                  el::FamilyKind::kPinned, cfg);
    const el::LocusClass want = r.rho == -0.5 ? el::LocusClass::kSegment : el::LocusClass::kEllipse;
    if (s.classification != want) ++mismatches;
  }
  ok = ok && mismatches == 0;
  detail += " pinned X_rho mismatches=" + std::to_string(mismatches);
  report("AC9", ok, detail);
}

void ac10() {
  std::string detail;
  const std::vector<Pinned> targeted{{"implicit-consistency", 1e-8}, {"conic-fit-equivalence", 1e-9},
                                     {"product-invariance", 1e-9}, {"ratio-special-rho", 1e-10}};
  el::VerifyOptions opt;
  opt.inject_fault = true;
  std::vector<std::string> ids;
  for (const Pinned& p : targeted) ids.emplace_back(p.check);
  int failed = 0;
  for (const el::CheckResult& r : el::run_verify(opt, ids)) {
    if (!r.pass) ++failed;
    detail += (detail.empty() ? "" : " ") + r.check_id + (r.pass ? ":pass" : ":FAIL");
  }
  report("AC10", failed >= 1, detail + " (" + std::to_string(failed) + " targeted failures under fault)");
}

}  // namespace

int main() {
  ac_catalogue("AC1", {{"closed-form-construction", 1e-10}});
  ac_catalogue("AC2", {{"conic-fit-equivalence", 1e-9}});
  ac_catalogue("AC3", {{"ratio-invariance", 1e-9}, {"product-invariance", 1e-9}, {"ratio-special-rho", 1e-10}});
  ac_catalogue("AC4", {{"circle-loci", 1e-9}, {"no-slanted-circle", 1e-3}});
  ac_catalogue("AC5", {{"x3-segment", 1e-9}, {"x3-length-extrema", 1e-9}});
  ac_catalogue("AC6", {{"line-rho-centers", 1e-10}, {"line-parallel-origin", 1e-12}, {"slope-product", 1e-10}});
  ac7();
  ac_catalogue("AC8", {{"limacon-witness", 1.0}, {"steiner-hat", 1e-6}});
  ac9();
  ac10();
  std::printf("%d criterion line(s) failing\n", g_failures);
  return g_failures ? 1 : 0;
}
