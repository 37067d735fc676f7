// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ellipse_loci {

enum class ErrorKind {
  kInvalidEllipse,
  kInvalidConfig,
  kCollinearVertices,
  kDegenerateTriangle,
  kNotOnNagelLine,
  kNotAnEllipse,
  kNoAnnihilatingRho,
  kBranchUndefined,
  kPreconditionViolated,
  kUndefined,
  kDegenerateCircle,
  kRankDeficient,
  kNotClosed,
  kInsufficientSpread,
  kAffinityCheckFailed,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidEllipse: return "invalid ellipse";
    case ErrorKind::kInvalidConfig: return "invalid configuration";
    case ErrorKind::kCollinearVertices: return "collinear vertices";
    case ErrorKind::kDegenerateTriangle: return "degenerate triangle";
    case ErrorKind::kNotOnNagelLine: return "not on Nagel line";
    case ErrorKind::kNotAnEllipse: return "not an ellipse";
    case ErrorKind::kNoAnnihilatingRho: return "no annihilating rho";
    case ErrorKind::kBranchUndefined: return "branch undefined";
    case ErrorKind::kPreconditionViolated: return "precondition violated";
    case ErrorKind::kUndefined: return "undefined";
    case ErrorKind::kDegenerateCircle: return "degenerate (circle)";
    case ErrorKind::kRankDeficient: return "rank deficient";
    case ErrorKind::kNotClosed: return "not closed";
    case ErrorKind::kInsufficientSpread: return "insufficient spread";
    case ErrorKind::kAffinityCheckFailed: return "affinity check failed";
  }
  return "unknown";
}

/// Raised by every operation whose precondition or geometric validity fails.
class GeometryError : public std::domain_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::domain_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellipse_loci
