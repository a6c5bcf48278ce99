#include "rdegree/error.hpp"

namespace rdegree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::OrderBelowValidity: return "OrderBelowValidity";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace rdegree
