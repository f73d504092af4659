// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigrel {

enum class ErrorKind {
  DivisionByZero,
  DomainError,
  NonConstructibleExact,
  SuperluminalError,
  InvalidSignal,
  FeatureDisabled,
  CalibrationFailure,
  NotOnWorldline,
  AnchorMismatch,
  DegenerateLine,
  NotTimelike,
  InvalidFrame,
  UnknownAxiom,
  SyntaxError,
  SortError,
  MissingDefinition,
  UnassignedVariable,
  NotEquivalence,
  ConfigError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonConstructibleExact: return "NonConstructibleExact";
    case ErrorKind::SuperluminalError: return "SuperluminalError";
    case ErrorKind::InvalidSignal: return "InvalidSignal";
    case ErrorKind::FeatureDisabled: return "FeatureDisabled";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::NotOnWorldline: return "NotOnWorldline";
    case ErrorKind::AnchorMismatch: return "AnchorMismatch";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::NotTimelike: return "NotTimelike";
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::UnknownAxiom: return "UnknownAxiom";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SortError: return "SortError";
    case ErrorKind::MissingDefinition: return "MissingDefinition";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::NotEquivalence: return "NotEquivalence";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sigrel
