#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sseamp {

enum class Errc {
  // graph construction / input
  DuplicateEdge,
  NonPositiveWeight,
  IsolatedVertex,
  IndexOutOfRange,
  SelfLoopNotAllowed,
  ParseError,
  IoError,
  // set arithmetic
  EmptySet,
  FullSet,
  // size guards
  GraphTooLargeForExactOracle,
  GraphTooLargeForDense,
  // parameters
  InvalidGapParameters,
  InvalidStepCount,
  InvalidFParameters,
  InvalidArgument,
  DimensionMismatch,
  NegativeInput,
  ZeroVector,
  // reductions
  ExpanderGenerationFailed,
  WeightedInputUnsupported,
  DegenerateProjection,
  FinderContractViolation,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sseamp
