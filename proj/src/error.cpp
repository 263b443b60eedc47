#include "twist/error.hpp"

namespace twist {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Loop: return "loop";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::NotPlane: return "not_plane";
    case ErrorCode::NotMaximal: return "not_maximal";
    case ErrorCode::LimitExceeded: return "limit_exceeded";
    case ErrorCode::OddVertexCount: return "odd_vertex_count";
    case ErrorCode::MismatchedAmbient: return "mismatched_ambient";
    case ErrorCode::UnknownNode: return "unknown_node";
    case ErrorCode::EmptyGraph: return "empty_graph";
    case ErrorCode::NoPath: return "no_path";
    case ErrorCode::FixedSetViolation: return "fixed_set_violation";
    case ErrorCode::ClaimViolation: return "claim_violation";
    case ErrorCode::NoPerfectMatching: return "no_perfect_matching";
    case ErrorCode::InvalidMatching: return "invalid_matching";
    case ErrorCode::InvalidPath: return "invalid_path";
    case ErrorCode::InvalidGraph: return "invalid_graph";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ClaimViolation::ClaimViolation(int step, std::string offending_edges, const std::string& message)
    : Error(ErrorCode::ClaimViolation,
            "step " + std::to_string(step) + ": " + message + " [" + offending_edges + "]"),
      step_(step),
      offending_edges_(std::move(offending_edges)) {}

}  // namespace twist
