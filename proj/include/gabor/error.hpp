#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gabor {

enum class ErrorCode {
  InvalidArgument,
  ConfigError,
  IoFailure,
  GridTooCoarse,
  NotConverged,
  TooManyPoints,
  RadiiNotAscending,
  NoTailPoint,
  RemainderDominates,
  NoConvergence,
  SingularResolvent,
  GapMissing,
  RankZero,
  TooFewPoints,
  InvalidContour,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit code for an error: 1 for input/configuration problems,
/// 2 for numerical failures.
int exit_code(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string key = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& key() const noexcept { return key_; }

  /// Single-line, machine-parsable rendering used on stderr by the CLI.
  std::string machine_line() const;

 private:
  ErrorCode code_;
  std::string key_;
};

}  // namespace gabor
