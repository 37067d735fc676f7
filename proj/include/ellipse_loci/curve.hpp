// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

#include "ellipse_loci/core.hpp"

namespace ellipse_loci {

// Parametric plane curve over [lo, hi]. The derivative is optional; when it is
// missing, consumers fall back to finite differences.
class ParamCurve {
 public:
  using Evaluator = std::function<Point(double)>;

  ParamCurve(Evaluator eval, double lo, double hi, bool closed,
             std::optional<Evaluator> derivative = std::nullopt)
      : eval_(std::move(eval)), derivative_(std::move(derivative)), lo_(lo), hi_(hi), closed_(closed) {}

  /// Closed curve over [0, 2π).
  static ParamCurve periodic(Evaluator eval, std::optional<Evaluator> derivative = std::nullopt) {
    return ParamCurve(std::move(eval), 0.0, kTwoPi, true, std::move(derivative));
  }

  Point operator()(double s) const { return eval_(s); }
  bool has_derivative() const { return derivative_.has_value(); }
  Vec2 derivative(double s) const {
    if (derivative_) return (*derivative_)(s);
    // Five-point central difference.
    const double h = 1e-3 * std::max(1.0, (hi_ - lo_) / kTwoPi);
    const Vec2 d = (eval_(s - 2 * h) - 8.0 * eval_(s - h) + 8.0 * eval_(s + h) - eval_(s + 2 * h));
    return d / (12.0 * h);
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool closed() const { return closed_; }
  /// +1 for the natural parametrization, −1 once reversed.
  int orientation() const { return orientation_; }

  /// Same trace, opposite orientation: s ↦ lo + hi − s.
  ParamCurve reversed() const {
    const double lo = lo_;
    const double hi = hi_;
    Evaluator e = [f = eval_, lo, hi](double s) { return f(lo + hi - s); };
    std::optional<Evaluator> d;
    if (derivative_) d = [g = *derivative_, lo, hi](double s) { return -g(lo + hi - s); };
    ParamCurve out(std::move(e), lo_, hi_, closed_, std::move(d));
    out.orientation_ = -orientation_;
    return out;
  }

 private:
  Evaluator eval_;
  std::optional<Evaluator> derivative_;
  double lo_;
  double hi_;
  bool closed_;
  int orientation_ = 1;
};

struct Mat2 {
  double m00 = 1.0;
  double m01 = 0.0;
  double m10 = 0.0;
  double m11 = 1.0;

  double det() const { return m00 * m11 - m01 * m10; }
  Vec2 operator*(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
            m10 * o.m01 + m11 * o.m11};
  }
  Mat2 inverse() const {
    const double d = det();
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
  }
};

// p ↦ linear·p + offset.
class AffineMap {
 public:
  AffineMap(Mat2 linear, Vec2 offset, double scale = 1.0) : linear_(linear), offset_(offset) {
    if (!(std::abs(linear.det()) > 1e-12 * scale * scale)) {
      throw GeometryError(ErrorKind::kUndefined, "affine map is not invertible");
    }
  }

  static AffineMap identity() { return AffineMap(Mat2{}, Vec2{}); }

  Point operator()(Point p) const { return linear_ * p + offset_; }
  Vec2 apply_linear(Vec2 v) const { return linear_ * v; }
  const Mat2& linear() const { return linear_; }
  Vec2 offset() const { return offset_; }

  AffineMap inverse() const {
    const Mat2 inv = linear_.inverse();
    return AffineMap(inv, -(inv * offset_), 1.0 / std::sqrt(std::abs(linear_.det())));
  }

 private:
  Mat2 linear_;
  Vec2 offset_;
};

}  // namespace ellipse_loci
