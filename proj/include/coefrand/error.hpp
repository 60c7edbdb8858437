#pragma once

#include <stdexcept>
#include <string>

namespace coefrand {

// Error codes for every failure mode a statistic or pipeline stage can hit.
// Callers that need to distinguish failures (e.g. the subsampling loop, which
// drops SingularGram windows but propagates everything else) switch on code().
enum class Errc {
  DegenerateRegressor,
  ZeroResidualVariance,
  ZeroDenominator,
  SingularGram,
  ZeroLongRunVariance,
  TruncationTooLarge,
  InvalidConfig,
  UnknownPreset,
  EmptyGrid,
  UnsupportedAlpha,
  ProductSubsamplingRejected,
  NonConvergence,
  DegenerateSeries,
  MissingColumn,
  NonNumericCell,
  MisalignedDates,
  InvalidCorrelation,
  InvalidInput,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coefrand
