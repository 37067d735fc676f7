// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

// CSV, JSON and SVG serialization. Numbers are printed with %.17g so that output is
// byte-identical across runs.

#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/curve.hpp"
#include "ellipse_loci/focal.hpp"
#include "ellipse_loci/verify.hpp"

namespace ellipse_loci {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CurveSample {
  double t;
  Point p;
};

inline std::vector<CurveSample> sample_curve(const ParamCurve& c, int n) {
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = c.lo() + (c.hi() - c.lo()) * i / n;
    out.push_back({t, c(t)});
  }
  return out;
}

inline void write_curve_csv(std::ostream& os, const std::vector<CurveSample>& pts) {
  os << "t,x,y\n";
  for (const CurveSample& s : pts) {
    os << format_number(s.t) << ',' << format_number(s.p.x) << ',' << format_number(s.p.y) << '\n';
  }
}

struct GeometryRow {
  double param;
  EllipseGeometry geometry;
};

inline void write_geometry_csv(std::ostream& os, const std::vector<GeometryRow>& rows) {
  os << "param,cx,cy,semi_major,semi_minor,rotation\n";
  for (const GeometryRow& r : rows) {
    const EllipseGeometry& g = r.geometry;
    os << format_number(r.param) << ',' << format_number(g.center.x) << ',' << format_number(g.center.y) << ','
       << format_number(g.semi_major) << ',' << format_number(g.semi_minor) << ',' << format_number(g.rotation)
       << '\n';
  }
}

inline Json to_json(Point p) { return Json::array({p.x, p.y}); }

inline Json to_json(const EllipseGeometry& g) {
  return Json{{"center", to_json(g.center)},
              {"semi_major", g.semi_major},
              {"semi_minor", g.semi_minor},
              {"rotation", g.rotation}};
}

inline Json to_json(const Conic& c) {
  return Json{{"a20", c.a20}, {"a11", c.a11}, {"a02", c.a02}, {"a10", c.a10}, {"a01", c.a01}, {"a00", c.a00}};
}

inline Json to_json(const CheckResult& r) {
  return Json{{"check_id", r.check_id},
              {"params", r.params},
              {"residual", r.residual},
              {"tolerance", r.tolerance},
              {"bound", r.bound == Bound::kAtMost ? "max" : "min"},
              {"pass", r.pass}};
}

inline Json to_json(const ScanResult& r) {
  Json j{{"center", r.center},
         {"family", to_string(r.family)},
         {"classification", to_string(r.classification)},
         {"residual", r.residual},
         {"thinness", r.thinness}};
  j["fitted_conic"] = r.fitted_conic ? to_json(*r.fitted_conic) : Json(nullptr);
  return j;
}

// Minimal SVG writer in world coordinates (y up).
class SvgCanvas {
 public:
  /// Bounds: E inflated to contain every curve added before `write`.
  explicit SvgCanvas(const Ellipse& e) : lo_{-e.a(), -e.b()}, hi_{e.a(), e.b()} {}

  void polyline(const std::vector<Point>& pts, const std::string& color, double width, bool closed = true) {
    for (const Point& p : pts) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    items_.push_back({pts, color, width, closed, false});
  }

  void dot(Point p, const std::string& color, double radius) { items_.push_back({{p}, color, radius, false, true}); }

  void write(std::ostream& os) const {
    const double pad = 0.05 * std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    const double x0 = lo_.x - pad;
    const double y0 = -(hi_.y + pad);
    const double w = hi_.x - lo_.x + 2.0 * pad;
    const double h = hi_.y - lo_.y + 2.0 * pad;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(x0) << ' ' << format_number(y0)
       << ' ' << format_number(w) << ' ' << format_number(h) << "\">\n";
    for (const Item& it : items_) {
      if (it.is_dot) {
        os << "<circle cx=\"" << format_number(it.pts[0].x) << "\" cy=\"" << format_number(-it.pts[0].y)
           << "\" r=\"" << format_number(it.width) << "\" fill=\"" << it.color << "\"/>\n";
        continue;
      }
      os << '<' << (it.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << it.color
         << "\" stroke-width=\"" << format_number(it.width) << "\" points=\"";
      for (std::size_t i = 0; i < it.pts.size(); ++i) {
        if (i) os << ' ';
        os << format_number(it.pts[i].x) << ',' << format_number(-it.pts[i].y);
      }
      os << "\"/>\n";
    }
    os << "</svg>\n";
  }

 private:
  struct Item {
    std::vector<Point> pts;
    std::string color;
    double width;
    bool closed;
    bool is_dot;
  };
  Point lo_;
  Point hi_;
  std::vector<Item> items_;
};

inline std::vector<Point> points_of(const std::vector<CurveSample>& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (const CurveSample& c : s) out.push_back(c.p);
  return out;
}

}  // namespace ellipse_loci
