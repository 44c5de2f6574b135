#include "pcashrink/error.hpp"

namespace pcashrink {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyData: return "empty-data";
    case ErrorCode::NonFinite: return "non-finite";
    case ErrorCode::NotSymmetric: return "not-symmetric";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::DimMismatch: return "dim-mismatch";
    case ErrorCode::FullRankInjective: return "full-rank-injective";
    case ErrorCode::InsufficientPairs: return "insufficient-pairs";
    case ErrorCode::ZeroVariance: return "zero-variance";
    case ErrorCode::InsufficientRows: return "insufficient-rows";
    case ErrorCode::BadFolds: return "bad-folds";
    case ErrorCode::BadArgument: return "bad-argument";
    case ErrorCode::DegenerateLabels: return "degenerate-labels";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

NoConvergenceError::NoConvergenceError(double residual, int sweeps)
    : Error(ErrorCode::NoConvergence,
            "Jacobi did not converge after " + std::to_string(sweeps) +
                " sweeps; off-diagonal residual " + std::to_string(residual)),
      residual_(residual),
      sweeps_(sweeps) {}

}  // namespace pcashrink
