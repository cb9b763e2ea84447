#include "sseamp/error.hpp"

namespace sseamp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SelfLoopNotAllowed: return "SelfLoopNotAllowed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::EmptySet: return "EmptySet";
    case Errc::FullSet: return "FullSet";
    case Errc::GraphTooLargeForExactOracle: return "GraphTooLargeForExactOracle";
    case Errc::GraphTooLargeForDense: return "GraphTooLargeForDense";
    case Errc::InvalidGapParameters: return "InvalidGapParameters";
    case Errc::InvalidStepCount: return "InvalidStepCount";
    case Errc::InvalidFParameters: return "InvalidFParameters";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ExpanderGenerationFailed: return "ExpanderGenerationFailed";
    case Errc::WeightedInputUnsupported: return "WeightedInputUnsupported";
    case Errc::DegenerateProjection: return "DegenerateProjection";
    case Errc::FinderContractViolation: return "FinderContractViolation";
  }
  return "Unknown";
}

}  // namespace sseamp
