// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starshape {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NonSmoothPoint,
  NotADensity,
  NonPositive,
  InvalidParameter,
  Divergent,
  QuadratureFailure,
  TableNotBuilt,
  NotUnitVector,
  BoundsUnavailable,
  NotOnCrossSection,
  NotPositiveDefinite,
  BadDegreesOfFreedom,
  OutOfRange,
  NotTriangular,
  NotOrdered,
  DegenerateRoots,
  TooFewSamples,
  DegenerateBins,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSmoothPoint: return "NonSmoothPoint";
    case ErrorCode::NotADensity: return "NotADensity";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::TableNotBuilt: return "TableNotBuilt";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::BoundsUnavailable: return "BoundsUnavailable";
    case ErrorCode::NotOnCrossSection: return "NotOnCrossSection";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::BadDegreesOfFreedom: return "BadDegreesOfFreedom";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateBins: return "DegenerateBins";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the leading code name.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace starshape
