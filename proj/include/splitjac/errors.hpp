// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitjac {

enum class ErrorKind {
  SingularMatrix,
  DivisionByZero,
  ParseError,
  NotIntegral,
  UnsupportedRank,
  InvalidTav,
  IncompatibleMorphism,
  NotIsogeny,
  NotInducible,
  ImageConditionViolated,
  NotPrincipal,
  NonIntegralAdjoint,
  ValidationError,
  InternalInconsistency,
  NotPositiveDefinite,
  PositiveQ12,
  IterationCapExceeded,
  NotInSigma,
  NonPositiveLength,
  WrongK,
  NonIntegralSlope,
  ConeCapExceeded,
  DegenerateSample,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// that callers (notably the CLI) can report it in structured form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace splitjac
