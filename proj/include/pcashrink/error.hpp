#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcashrink {

/// Failure categories reported by the toolkit. Each maps to a stable,
/// machine-readable code string (see `error_code_name`).
enum class ErrorCode {
  EmptyData,
  NonFinite,
  NotSymmetric,
  NoConvergence,
  DimMismatch,
  FullRankInjective,
  InsufficientPairs,
  ZeroVariance,
  InsufficientRows,
  BadFolds,
  BadArgument,
  DegenerateLabels,
  Io,
  Parse,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

/// Thrown by the eigensolver when the off-diagonal mass does not fall below
/// tolerance within the sweep budget.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(double residual, int sweeps);

  double residual() const noexcept { return residual_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double residual_;
  int sweeps_;
};

}  // namespace pcashrink
