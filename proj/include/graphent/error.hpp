#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphent {

enum class ErrorCode {
  MalformedToken,
  LoopEdge,
  NegativeIndex,
  ByteOutOfRange,
  TruncatedBitStream,
  TrailingBytes,
  ContradictoryArcs,
  DisconnectedGraph,
  OutOfRange,
  InvalidArgument,
  NonSymmetric,
  NonSkew,
  NoConvergence,
  NumericalFailure,
  NotOriented,
  EmptyEdgeSet,
  ZeroSpectrum,
  AllZeroWeights,
  AlphaOne,
  AlphaNonPositive,
  HypothesisViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphent
