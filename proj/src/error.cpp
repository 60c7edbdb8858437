#include "coefrand/error.hpp"

namespace coefrand {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::DegenerateRegressor: return "DegenerateRegressor";
    case Errc::ZeroResidualVariance: return "ZeroResidualVariance";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::SingularGram: return "SingularGram";
    case Errc::ZeroLongRunVariance: return "ZeroLongRunVariance";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::UnsupportedAlpha: return "UnsupportedAlpha";
    case Errc::ProductSubsamplingRejected: return "ProductSubsamplingRejected";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::DegenerateSeries: return "DegenerateSeries";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::NonNumericCell: return "NonNumericCell";
    case Errc::MisalignedDates: return "MisalignedDates";
    case Errc::InvalidCorrelation: return "InvalidCorrelation";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace coefrand
