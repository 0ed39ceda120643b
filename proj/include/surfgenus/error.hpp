#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfgenus {

enum class ErrorCode {
  DegenerateTriangle,
  NonManifoldEdge,
  BadVertexLink,
  DuplicateTriangle,
  NonOrientable,
  EmptySurface,
  InvalidSubcomplex,
  TriangleIndexOutOfRange,
  TriangleTouchesBoundary,
  NotConnected,
  DimensionMismatch,
  InvalidDegree,
  OddC1,
  OracleMismatch,
  BadParams,
  WindowTooLarge,
  BadInclusion,
  ParseError,
  IoError,
};

// Stable identifier printed by the CLI on failure, e.g. "NonOrientable".
std::string_view error_name(ErrorCode code) noexcept;

// True for errors that signal an internal inconsistency rather than bad input.
constexpr bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::OddC1 || code == ErrorCode::OracleMismatch;
}

class SurfaceError : public std::runtime_error {
 public:
  SurfaceError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfgenus
