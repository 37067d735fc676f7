// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ellipse_loci/core.hpp"

namespace el = ellipse_loci;

namespace {

const el::Ellipse kE(2.0, 1.0);

TEST(Ellipse, RejectsBadAxes) {
  EXPECT_THROW(el::Ellipse(1.0, 2.0), el::GeometryError);
  EXPECT_THROW(el::Ellipse(1.0, 0.0), el::GeometryError);
  EXPECT_THROW(el::Ellipse(NAN, 1.0), el::GeometryError);
  try {
    el::Ellipse(1.0, 2.0);
  } catch (const el::GeometryError& ex) {
    EXPECT_EQ(ex.kind(), el::ErrorKind::kInvalidEllipse);
  }
  EXPECT_NO_THROW(el::Ellipse(1.0, 1.0));
}

TEST(Ellipse, Foci) {
  EXPECT_DOUBLE_EQ(kE.c(), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(kE.focus1().x, -std::sqrt(3.0));
  EXPECT_TRUE(el::Ellipse(1.5, 1.5).is_circle());
}

TEST(BoundaryPoint, AxisVertices) {
  EXPECT_NEAR(el::boundary_point(kE, 0.0).x, 2.0, 1e-15);
  EXPECT_NEAR(el::boundary_point(kE, 0.0).y, 0.0, 1e-15);
  EXPECT_NEAR(el::boundary_point(kE, el::kPi / 2).x, 0.0, 1e-15);
  EXPECT_NEAR(el::boundary_point(kE, el::kPi / 2).y, 1.0, 1e-15);
}

TEST(BoundaryPoint, SixtyDegrees) {
  const el::Point p = el::boundary_point(kE, el::kPi / 3);
  EXPECT_NEAR(p.x, 1.0, 1e-15);
  EXPECT_NEAR(p.y, std::sqrt(3.0) / 2, 1e-15);
}

TEST(BoundaryPoint, OnEllipse) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, el::kTwoPi);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(std::abs(kE.implicit(el::boundary_point(kE, u(rng)))), 1e-14);
}

TEST(TriangleConfig, RejectsCoincidentVertices) {
  EXPECT_THROW(el::TriangleConfig(0.3, 0.3), el::GeometryError);
  EXPECT_THROW(el::TriangleConfig(0.3, 0.3 + el::kTwoPi), el::GeometryError);
  EXPECT_THROW(el::TriangleConfig(INFINITY, 0.3), el::GeometryError);
}

TEST(TriangleConfig, AnglesAreNotReduced) {
  const el::TriangleConfig cfg(5.0, 4.0);
  EXPECT_DOUBLE_EQ(cfg.t0(), 9.0);
  EXPECT_DOUBLE_EQ(cfg.z(), std::cos(9.0));
}

TEST(ChordSlope, Horizontal) {
  const el::Slope s = el::chord_slope(kE, {0.3, el::kPi - 0.3});
  ASSERT_FALSE(s.is_vertical());
  EXPECT_NEAR(s.value(), 0.0, 1e-15);
}

TEST(ChordSlope, Vertical) {
  const el::Slope s = el::chord_slope(kE, {0.4, -0.4});
  EXPECT_TRUE(s.is_vertical());
  EXPECT_THROW((void)s.value(), el::GeometryError);
}

TEST(ChordSlope, MatchesTwoPointSlope) {
  const el::Point p = el::boundary_point(kE, 0.5);
  const el::Point q = el::boundary_point(kE, 0.7);
  const double two_point = (q.y - p.y) / (q.x - p.x);
  EXPECT_NEAR(el::chord_slope(kE, {0.5, 0.7}).value(), -0.5 / std::tan(0.6), 1e-14);
  EXPECT_NEAR(el::chord_slope(kE, {0.5, 0.7}).value(), two_point, 1e-12);
}

TEST(ChordSlope, DependsOnlyOnT0) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, el::kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const double t0 = u(rng);
    const double t1 = u(rng);
    const double t1p = u(rng);
    if (std::abs(std::remainder(2 * t1 - t0, el::kTwoPi)) < 0.1) continue;
    if (std::abs(std::remainder(2 * t1p - t0, el::kTwoPi)) < 0.1) continue;
    const el::Vec2 d1 = el::boundary_point(kE, t0 - t1) - el::boundary_point(kE, t1);
    const el::Vec2 d2 = el::boundary_point(kE, t0 - t1p) - el::boundary_point(kE, t1p);
    EXPECT_LT(std::abs(el::cross(d1 / el::norm(d1), d2 / el::norm(d2))), 1e-12);
  }
}

TEST(Line, Normalization) {
  const el::Line l = el::Line::from_coefficients(-3.0, -4.0, 10.0);
  EXPECT_DOUBLE_EQ(l.A() * l.A() + l.B() * l.B(), 1.0);
  EXPECT_GT(l.A(), 0.0);
  EXPECT_NEAR(l.C(), -2.0, 1e-15);
  const el::Line v = el::Line::from_coefficients(0.0, -2.0, 1.0);
  EXPECT_EQ(v.A(), 0.0);
  EXPECT_GT(v.B(), 0.0);
  EXPECT_THROW(el::Line::from_coefficients(0.0, 0.0, 1.0), el::GeometryError);
}

TEST(Line, VerticalSlopeIsTagged) {
  EXPECT_TRUE(el::Line::from_coefficients(1.0, 0.0, -2.0).slope().is_vertical());
}

TEST(PerpBisector, SymmetricVerticalChord) {
  const el::Bisector b = el::perp_bisector(kE, {el::kPi / 4, -el::kPi / 4});
  EXPECT_NEAR(b.line.A(), 0.0, 1e-15);
  EXPECT_NEAR(b.line.C(), 0.0, 1e-15);
  EXPECT_FALSE(b.from_limit);
}

TEST(PerpBisector, HorizontalChordUsesLimit) {
  // t0 = pi: the closed-form coefficients all vanish.
  const el::Bisector b = el::perp_bisector(kE, {0.3, el::kPi - 0.3});
  EXPECT_TRUE(b.from_limit);
  EXPECT_NEAR(b.line.B(), 0.0, 1e-15);
  EXPECT_NEAR(b.line.C(), 0.0, 1e-15);
}

TEST(PerpBisector, PassesThroughMidpointPerpendicular) {
  const el::TriangleConfig cfg(0.5, 0.9);
  const el::Point v1 = el::boundary_point(kE, 0.5);
  const el::Point v2 = el::boundary_point(kE, 0.9);
  const el::Bisector b = el::perp_bisector(kE, cfg);
  EXPECT_FALSE(b.from_limit);
  EXPECT_LT(b.line.distance(el::midpoint(v1, v2)), 1e-12);
  EXPECT_LT(std::abs(el::dot(b.line.direction(), (v2 - v1) / el::norm(v2 - v1))), 1e-12);
}

TEST(PerpBisector, CircleThroughOrigin) {
  const el::Ellipse c(1.0, 1.0);
  for (double t1 : {0.1, 1.0, 2.5}) {
    EXPECT_LT(el::perp_bisector(c, {t1, t1 + 1.3}).line.distance({0.0, 0.0}), 1e-14);
  }
}

}  // namespace
