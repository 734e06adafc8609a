#include "gabor/error.hpp"

namespace gabor {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::RadiiNotAscending: return "RadiiNotAscending";
    case ErrorCode::NoTailPoint: return "NoTailPoint";
    case ErrorCode::RemainderDominates: return "RemainderDominates";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::GapMissing: return "GapMissing";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidContour: return "InvalidContour";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ConfigError:
    case ErrorCode::IoFailure:
    case ErrorCode::RadiiNotAscending:
      return 1;
    default:
      return 2;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::string key)
    : std::runtime_error(message), code_(code), key_(std::move(key)) {}

std::string Error::machine_line() const {
  std::string line = "error code=";
  line += to_string(code_);
  if (!key_.empty()) {
    line += " key=";
    line += key_;
  }
  line += " msg=\"";
  for (char c : std::string_view(what())) {
    if (c == '"') {
      line += "\\\"";
    } else if (c == '\n') {
      line += ' ';
    } else {
      line += c;
    }
  }
  line += '"';
  return line;
}

}  // namespace gabor
