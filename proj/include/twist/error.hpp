#pragma once

#include <stdexcept>
#include <string>

namespace twist {

enum class ErrorCode {
  Loop,
  OutOfRange,
  NotPlane,
  NotMaximal,
  LimitExceeded,
  OddVertexCount,
  MismatchedAmbient,
  UnknownNode,
  EmptyGraph,
  NoPath,
  FixedSetViolation,
  ClaimViolation,
  NoPerfectMatching,
  InvalidMatching,
  InvalidPath,
  InvalidGraph,
  ParseError,
};

// Stable machine-readable identifier ("not_plane", "claim_violation", ...).
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A constructed flip step failed planarity, maximality or containment of the
// fixed edge set. Carries the step index and the offending edge set so a
// falsified step claim is reportable, not silently repaired.
class ClaimViolation : public Error {
 public:
  ClaimViolation(int step, std::string offending_edges, const std::string& message);

  int step() const noexcept { return step_; }
  const std::string& offending_edges() const noexcept { return offending_edges_; }

 private:
  int step_;
  std::string offending_edges_;
};

}  // namespace twist
