#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace larlens {

enum class ErrorCode {
  kIo,
  kBadMagic,
  kUnsupportedVersion,
  kMalformedHeader,
  kUnsupportedDtype,
  kUnsupportedRank,
  kElementCountMismatch,
  kNonFinite,
  kMissingColumn,
  kNonMonotoneSteps,
  kUnparseableCell,
  kInvalidArgument,
  kDimensionMismatch,
  kZeroMatrix,
  kZeroBatch,
  kNoConvergence,
  kDegenerate,
  kOutOfRange,
  kInsufficientData,
  kEmptyIntersection,
  kInconsistentSpec,
  kInvalidTask,
  kDivergence,
};

const char* to_string(ErrorCode code);

// Every failure surfaced by the library is an Error carrying a code and, where
// it applies, the name of the offending field (NPY header key, CSV column, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

class SvdNoConvergence : public Error {
 public:
  explicit SvdNoConvergence(int sweeps)
      : Error(ErrorCode::kNoConvergence,
              "svd did not converge after " + std::to_string(sweeps) + " sweeps"),
        sweeps_(sweeps) {}

  int sweeps() const noexcept { return sweeps_; }

 private:
  int sweeps_;
};

class DivergenceError : public Error {
 public:
  DivergenceError(std::int64_t epoch, std::int64_t step)
      : Error(ErrorCode::kDivergence,
              "non-finite loss at epoch " + std::to_string(epoch) + ", step " +
                  std::to_string(step)),
        epoch_(epoch),
        step_(step) {}

  std::int64_t epoch() const noexcept { return epoch_; }
  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t epoch_;
  std::int64_t step_;
};

}  // namespace larlens
