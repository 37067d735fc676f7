// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// ellipse-locus: sweeps, figure data and the verification report.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellipse_loci/ellipse_loci.hpp"
#include "ellipse_loci/io.hpp"

namespace el = ellipse_loci;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  double a = 2.0;
  double b = 1.0;
  std::optional<double> t1;
  std::optional<double> t2;
  std::optional<double> t0;
  std::vector<double> rho;
  int samples = 0;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  // verify
  std::vector<std::string> only;
  bool inject_fault = false;
  // scan
  std::vector<std::string> centers;
  std::string family = "focal";
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& rc, bool wants_rho) {
  sub->add_option("--a", rc.a, "semi-major axis")->capture_default_str();
  sub->add_option("--b", rc.b, "semi-minor axis")->capture_default_str();
  sub->add_option("--samples", rc.samples, "sample count");
  sub->add_option("--tol", rc.tol, "tolerance override");
  sub->add_option("--seed", rc.seed, "random seed (fallback: ELLIPSE_LOCUS_SEED)");
  sub->add_option("--out", rc.out, "output directory");
  sub->add_option("--format", rc.format, "stdout format")->check(CLI::IsMember({"csv", "json", "svg"}));
  if (wants_rho) sub->add_option("--rho", rc.rho, "rho values, comma separated")->delimiter(',');
}

el::Ellipse make_ellipse(const RunConfig& rc) { return el::Ellipse(rc.a, rc.b); }

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw ConfigError(std::string("--") + name + " is required");
  return *v;
}

el::TriangleConfig make_config(const RunConfig& rc) {
  return el::TriangleConfig(require(rc.t1, "t1"), require(rc.t2, "t2"));
}

std::uint64_t resolve_seed(const RunConfig& rc) {
  if (rc.seed) return *rc.seed;
  if (const char* env = std::getenv("ELLIPSE_LOCUS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("ELLIPSE_LOCUS_SEED is not an unsigned integer");
    }
  }
  return el::VerifyOptions{}.seed;
}

std::string label(double v) {
  std::string s = el::format_number(v);
  for (char& c : s) {
    if (c == '-') c = 'm';
    if (c == '.') c = 'p';
  }
  return s;
}

// Collects named artifacts; writes them under --out, or the selected format to stdout.
class Output {
 public:
  explicit Output(const RunConfig& rc) : rc_(rc) {}

  void csv(const std::string& name, const std::string& body) { csv_.emplace_back(name, body); }
  void svg(const std::string& body) { svg_ = body; }

  void finish(const el::Json& report) const {
    if (!rc_.out.empty()) {
      fs::create_directories(rc_.out);
      write_file(fs::path(rc_.out) / "report.json", report.dump(2) + "\n");
      for (const auto& [name, body] : csv_) write_file(fs::path(rc_.out) / (name + ".csv"), body);
      if (!svg_.empty()) write_file(fs::path(rc_.out) / "figure.svg", svg_);
    }
    if (rc_.format == "json") {
      if (rc_.out.empty()) std::cout << report.dump(2) << "\n";
    } else if (rc_.format == "csv") {
      for (const auto& [name, body] : csv_) {
        if (csv_.size() > 1) std::cout << "# " << name << "\n";
        std::cout << body;
      }
    } else {
      std::cout << svg_;
    }
  }

 private:
  static void write_file(const fs::path& p, const std::string& body) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + p.string());
    os << body;
  }

  const RunConfig& rc_;
  std::vector<std::pair<std::string, std::string>> csv_;
  std::string svg_;
};

el::Json header(const char* command) {
  return el::Json{{"schema", el::kSchemaVersion}, {"tool", "ellipse-locus"}, {"command", command}};
}

std::vector<el::Point> ellipse_points(const el::EllipseGeometry& g, int n) {
  std::vector<el::Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(g.point_at(el::kTwoPi * i / n));
  return pts;
}

int cmd_locus(const RunConfig& rc) {
  const el::Ellipse e = make_ellipse(rc);
  const el::TriangleConfig cfg = make_config(rc);
  const std::vector<double> rhos = rc.rho.empty() ? std::vector<double>{0.0} : rc.rho;
  const int n = rc.samples > 0 ? rc.samples : 256;
  Output out(rc);
  el::Json report = header("locus");
  report["params"] = {{"a", rc.a}, {"b", rc.b}, {"t1", cfg.t1()}, {"t2", cfg.t2()}};
  el::SvgCanvas svg(e);
  svg.polyline(ellipse_points({{}, e.a(), e.b(), 0.0}, 512), "black", 0.01 * e.a());
  const el::Point v1 = el::boundary_point(e, cfg.t1());
  const el::Point v2 = el::boundary_point(e, cfg.t2());
  svg.polyline({v1, v2}, "blue", 0.01 * e.a(), false);
  std::vector<el::GeometryRow> rows;
  el::Json loci = el::Json::array();
  const char* palette[] = {"green", "red", "orange", "purple", "teal", "magenta"};
  int idx = 0;
  for (double rho : rhos) {
    const el::EllipseGeometry g = el::xrho_geometry(e, cfg, rho);
    rows.push_back({rho, g});
    const auto pts = el::sample_curve(el::xrho_locus_param(e, cfg, rho), n);
    std::ostringstream os;
    el::write_curve_csv(os, pts);
    out.csv("locus_rho_" + label(rho), os.str());
    svg.polyline(el::points_of(pts), palette[idx++ % 6], 0.008 * e.a());
    loci.push_back({{"rho", rho},
                    {"geometry", el::to_json(g)},
                    {"shape", el::to_string(el::classify_locus(g, e))},
                    {"axis_product", el::axis_product(e, cfg, rho)}});
  }
  std::ostringstream geo;
  el::write_geometry_csv(geo, rows);
  out.csv("geometry", geo.str());
  out.svg([&] {
    std::ostringstream os;
    svg.write(os);
    return os.str();
  }());
  report["loci"] = loci;
  out.finish(report);
  return 0;
}

int cmd_sweep_parallel(const RunConfig& rc) {
  const el::Ellipse e = make_ellipse(rc);
  const double t0 = require(rc.t0, "t0");
  const std::vector<double> rhos = rc.rho.empty() ? std::vector<double>{1.0} : rc.rho;
  const int n = rc.samples > 0 ? rc.samples : 10;
  const double tol = rc.tol.value_or(1e-9);
  Output out(rc);
  el::Json report = header("sweep-parallel");
  report["params"] = {{"a", rc.a}, {"b", rc.b}, {"t0", t0}, {"chords", n}, {"tolerance", tol}};
  el::Json sweeps = el::Json::array();
  bool ok = true;
  for (double rho : rhos) {
    const el::Line lp = el::line_parallel(e, t0, rho).line;
    std::vector<el::GeometryRow> rows;
    for (int i = 0; i < n; ++i) {
      const double t1 = t0 / 2.0 + el::kPi * (i + 0.5) / n;  // t1 − t2 sweeps (0, 2π)
      const el::TriangleConfig cfg(t1, t0 - t1);
      rows.push_back({t1, el::xrho_geometry(e, cfg, rho)});
    }
    double axes = 0.0;
    double rot = 0.0;
    double line_res = 0.0;
    for (const el::GeometryRow& r : rows) {
      axes = std::max({axes, std::abs(r.geometry.semi_major - rows[0].geometry.semi_major),
                       std::abs(r.geometry.semi_minor - rows[0].geometry.semi_minor)});
      rot = std::max(rot, std::abs(std::remainder(r.geometry.rotation - rows[0].geometry.rotation, el::kPi)));
      line_res = std::max(line_res, lp.distance(r.geometry.center));
    }
    const bool pass = axes < tol && rot < tol && line_res < tol;
    ok = ok && pass;
    std::ostringstream os;
    el::write_geometry_csv(os, rows);
    out.csv("sweep_rho_" + label(rho), os.str());
    sweeps.push_back({{"rho", rho},
                      {"axes_spread", axes},
                      {"rotation_spread", rot},
                      {"center_line_residual", line_res},
                      {"line_parallel", {lp.A(), lp.B(), lp.C()}},
                      {"pass", pass}});
  }
  report["sweeps"] = sweeps;
  report["pass"] = ok;
  out.finish(report);
  return ok ? 0 : 1;
}

int cmd_envelope(const RunConfig& rc) {
  const el::Ellipse e = make_ellipse(rc);
  const double t1 = require(rc.t1, "t1");
  const std::vector<double> rhos = rc.rho.empty() ? std::vector<double>{1.0} : rc.rho;
  const int n = rc.samples > 0 ? rc.samples : 512;
  Output out(rc);
  el::Json report = header("envelope");
  report["params"] = {{"a", rc.a}, {"b", rc.b}, {"t1", t1}};
  el::SvgCanvas svg(e);
  svg.polyline(ellipse_points({{}, e.a(), e.b(), 0.0}, 512), "black", 0.01 * e.a());
  el::Json envs = el::Json::array();
  for (double rho : rhos) {
    const el::ParamCurve g = el::envelope_gamma_t1(e, t1, rho);
    const auto pts = el::sample_curve(g, n);
    std::ostringstream os;
    el::write_curve_csv(os, pts);
    out.csv("envelope_rho_" + label(rho), os.str());
    svg.polyline(el::points_of(pts), "magenta", 0.008 * e.a());
    for (int i = 0; i < 12; ++i) {
      const el::TriangleConfig cfg(t1, t1 + el::kTwoPi * (i + 0.5) / 12);
      svg.polyline(ellipse_points(el::xrho_geometry(e, cfg, rho), 256), "green", 0.004 * e.a());
    }
    el::Json j{{"rho", rho},
               {"area_quadrature", el::curve_area(g)},
               {"area_closed_form", el::envelope_area(e, rho)},
               {"centers_locus", el::to_json(el::centers_locus_gamma(e, t1, rho))}};
    try {
      const el::FitReport fit = el::fit_conic(el::points_of(el::sample_curve(g, 64)), el::kDefaultTolerances.fit_rank, true);
      j["fit_residual"] = fit.residual;
      if (fit.rank_deficient || fit.residual > el::kDefaultTolerances.fit_non_conic) {
        j["fit_class"] = "non-conic";
      } else {
        j["fit_class"] = el::to_string(el::classify_conic(fit.conic));
        j["fit_geometry"] = el::to_json(el::axis_geometry(fit.conic));
      }
    } catch (const el::GeometryError& ex) {
      j["fit_class"] = std::string("unavailable: ") + ex.what();
    }
    envs.push_back(j);
  }
  const el::ParamCurve d = el::deltoid(e, t1);
  const auto dpts = el::sample_curve(d, n);
  std::ostringstream dos;
  el::write_curve_csv(dos, dpts);
  out.csv("deltoid", dos.str());
  svg.polyline(el::points_of(dpts), "orange", 0.008 * e.a());
  const double dq = el::curve_area(d);
  const double dc = el::deltoid_area(e);
  report["deltoid"] = {{"area_quadrature", dq},
                       {"area_closed_form", dc},
                       {"closed_form_over_quadrature", dq != 0.0 ? dc / std::abs(dq) : 0.0}};
  report["envelopes"] = envs;
  out.svg([&] {
    std::ostringstream os;
    svg.write(os);
    return os.str();
  }());
  out.finish(report);
  return 0;
}

int cmd_focal(const RunConfig& rc) {
  const el::Ellipse e = make_ellipse(rc);
  if (e.is_circle()) throw ConfigError("a > b required (foci coincide)");
  const int n = rc.samples > 0 ? rc.samples : 256;
  Output out(rc);
  el::Json report = header("focal");
  report["params"] = {{"a", rc.a}, {"b", rc.b}};
  el::SvgCanvas svg(e);
  svg.polyline(ellipse_points({{}, e.a(), e.b(), 0.0}, 512), "black", 0.01 * e.a());
  el::Json loci = el::Json::array();
  const std::vector<std::pair<int, el::Point (*)(const el::Triangle&)>> centers{
      {1, el::incenter}, {2, el::barycenter}, {8, el::nagel_point}, {10, el::spieker_center}};
  for (const auto& [k, f] : centers) {
    const el::Conic c = el::focal_locus_implicit(e, k);
    std::vector<el::CurveSample> pts;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = el::kTwoPi * (i + 0.5) / n;
      const el::Point p = f(el::focal_triangle(e, t));
      pts.push_back({t, p});
      worst = std::max(worst, std::abs(c(p)));
    }
    std::ostringstream os;
    el::write_curve_csv(os, pts);
    out.csv("focal_X" + std::to_string(k), os.str());
    svg.polyline(el::points_of(pts), "green", 0.008 * e.a());
    loci.push_back({{"k", k},
                    {"implicit", el::to_json(c)},
                    {"geometry", el::to_json(el::focal_locus_geometry(e, k))},
                    {"max_residual", worst}});
  }
  report["loci"] = loci;
  if (std::abs(e.a() / e.b() - 2.0 / std::sqrt(3.0)) <= 1e-12) {
    const el::EquilateralReport eq = el::equilateral_check(e);
    report["equilateral"] = {{"spread", eq.spread}, {"equilateral", eq.equilateral}};
  }
  out.svg([&] {
    std::ostringstream os;
    svg.write(os);
    return os.str();
  }());
  out.finish(report);
  return 0;
}

int cmd_scan(const RunConfig& rc) {
  const el::Ellipse e = make_ellipse(rc);
  el::FamilyKind fam;
  if (rc.family == "focal") {
    fam = el::FamilyKind::kFocal;
    if (e.is_circle()) throw ConfigError("a > b required for the focal family");
  } else if (rc.family == "pinned") {
    fam = el::FamilyKind::kPinned;
  } else {
    throw ConfigError("--family must be pinned or focal");
  }
  std::optional<el::TriangleConfig> cfg;
  if (fam == el::FamilyKind::kPinned) cfg = make_config(rc);
  el::ScanOptions opt;
  if (rc.samples > 0) opt.samples = rc.samples;
  if (rc.tol) opt.tol.fit_non_conic = *rc.tol;
  std::vector<std::string> names = rc.centers;
  if (names.empty()) names = {"X1", "X2", "X6", "X7", "X8", "X9", "X10", "X145", "X551"};
  el::Json results = el::Json::array();
  std::ostringstream csv;
  csv << "center,family,classification,residual\n";
  std::vector<el::CenterFunction> fs;
  for (const std::string& name : names) {
    const auto f = el::find_center(name);
    if (!f) throw ConfigError("unknown center " + name);
    fs.push_back(*f);
  }
  for (const el::ScanResult& r : el::scan_centers(e, fs, fam, cfg, opt)) {
    results.push_back(el::to_json(r));
    csv << r.center << ',' << el::to_string(r.family) << ',' << el::to_string(r.classification) << ','
        << el::format_number(r.residual) << '\n';
  }
  Output out(rc);
  out.csv("scan", csv.str());
  el::Json report = header("scan");
  report["params"] = {{"a", rc.a}, {"b", rc.b}, {"family", rc.family}, {"samples", opt.samples}};
  report["results"] = results;
  out.finish(report);
  return 0;
}

int cmd_verify(const RunConfig& rc) {
  el::VerifyOptions opt;
  opt.seed = resolve_seed(rc);
  opt.inject_fault = rc.inject_fault;
  std::vector<el::CheckResult> results;
  try {
    results = el::run_verify(opt, rc.only);
  } catch (const el::GeometryError& ex) {
    throw ConfigError(ex.what());
  }
  bool ok = true;
  el::Json checks = el::Json::array();
  std::ostringstream csv;
  csv << "check_id,residual,tolerance,pass\n";
  for (const el::CheckResult& r : results) {
    ok = ok && r.pass;
    checks.push_back(el::to_json(r));
    csv << r.check_id << ',' << el::format_number(r.residual) << ',' << el::format_number(r.tolerance) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  el::Json report = header("verify");
  report["seed"] = opt.seed;
  report["inject_fault"] = opt.inject_fault;
  report["checks"] = checks;
  report["pass"] = ok;
  Output out(rc);
  out.csv("verify", csv.str());
  out.finish(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loci of triangle centers over ellipse-inscribed triangle families"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* locus = app.add_subcommand("locus", "X_rho loci for a pinned chord");
  add_common(locus, rc, true);
  locus->add_option("--t1", rc.t1, "first pinned vertex parameter");
  locus->add_option("--t2", rc.t2, "second pinned vertex parameter");

  auto* sweep = app.add_subcommand("sweep-parallel", "loci over parallel chords t1 + t2 = t0");
  add_common(sweep, rc, true);
  sweep->add_option("--t0", rc.t0, "chord parameter sum");

  auto* env = app.add_subcommand("envelope", "envelopes with V1 fixed");
  add_common(env, rc, true);
  env->add_option("--t1", rc.t1, "fixed vertex parameter");

  auto* focal = app.add_subcommand("focal", "loci over the focal family");
  add_common(focal, rc, false);

  auto* scan = app.add_subcommand("scan", "classify center loci by conic fitting");
  add_common(scan, rc, false);
  scan->add_option("--t1", rc.t1, "first pinned vertex parameter (pinned family)");
  scan->add_option("--t2", rc.t2, "second pinned vertex parameter (pinned family)");
  scan->add_option("--centers", rc.centers, "center names, e.g. X6,X8")->delimiter(',');
  scan->add_option("--family", rc.family, "pinned or focal")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the property catalogue");
  add_common(verify, rc, false);
  verify->add_option("--only", rc.only, "check ids, comma separated")->delimiter(',');
  verify->add_flag("--inject-fault", rc.inject_fault, "perturb one implicit coefficient by 1e-3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  try {
    if (*locus) return cmd_locus(rc);
    if (*sweep) return cmd_sweep_parallel(rc);
    if (*env) return cmd_envelope(rc);
    if (*focal) return cmd_focal(rc);
    if (*scan) return cmd_scan(rc);
    if (*verify) return cmd_verify(rc);
  } catch (const ConfigError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const el::GeometryError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
