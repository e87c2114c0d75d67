#pragma once

#include <stdexcept>
#include <string>

namespace jackchar {

// Operational failure modes. Mathematical check failures (violations of a
// verified statement) are report content, not errors; these codes cover the
// cases where a computation cannot produce a trustworthy result at all.
enum class ErrorCode {
  BudgetExceeded,
  SizeMismatch,
  Inconsistent,
  Underdetermined,
  DegreeExceeded,
  VerifyFailure,
  ReconstructionMismatch,
  NonPolynomial,
  Degenerate,
  RankMismatch,
  RankTooSmall,
  RankBudget,
  UnsupportedPartition,
  NormalizationFailure,
  FitFailure,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
    case ErrorCode::Underdetermined: return "UNDERDETERMINED";
    case ErrorCode::DegreeExceeded: return "DEGREE_EXCEEDED";
    case ErrorCode::VerifyFailure: return "VERIFY_FAILURE";
    case ErrorCode::ReconstructionMismatch: return "RECONSTRUCTION_MISMATCH";
    case ErrorCode::NonPolynomial: return "NON_POLYNOMIAL";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::RankTooSmall: return "RANK_TOO_SMALL";
    case ErrorCode::RankBudget: return "RANK_BUDGET";
    case ErrorCode::UnsupportedPartition: return "UNSUPPORTED_PARTITION";
    case ErrorCode::NormalizationFailure: return "NORMALIZATION_FAILURE";
    case ErrorCode::FitFailure: return "FIT_FAILURE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace jackchar
