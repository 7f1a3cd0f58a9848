#include "graphent/error.hpp"

namespace graphent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::ByteOutOfRange: return "ByteOutOfRange";
    case ErrorCode::TruncatedBitStream: return "TruncatedBitStream";
    case ErrorCode::TrailingBytes: return "TrailingBytes";
    case ErrorCode::ContradictoryArcs: return "ContradictoryArcs";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NonSkew: return "NonSkew";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NotOriented: return "NotOriented";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::ZeroSpectrum: return "ZeroSpectrum";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::AlphaOne: return "AlphaOne";
    case ErrorCode::AlphaNonPositive: return "AlphaNonPositive";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace graphent
