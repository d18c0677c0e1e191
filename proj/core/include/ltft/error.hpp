#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltft {

enum class Errc {
  invalid_parameter,
  unsupported_dimension,
  budget_exceeded,
  parse_error,
  unsupported_format,
  usage_error,
  io_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::unsupported_dimension: return "unsupported-dimension";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::parse_error: return "parse-error";
    case Errc::unsupported_format: return "unsupported-format";
    case Errc::usage_error: return "usage-error";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

/// Single exception type for the library; `code()` is the machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const char* message) {
  if (!condition) throw Error(code, message);
}

}  // namespace ltft
