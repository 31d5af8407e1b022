#pragma once

#include <stdexcept>
#include <string>

namespace drg {

enum class ErrorCode {
  BadParams,
  NotPrime,
  TooLarge,
  TooMany,
  ZeroInverse,
  AmbientMismatch,
  VertexNotInGraph,
  TooLargeForFormat,
  Malformed,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the core carries one of the codes above; the C API
// maps them one-to-one onto drg_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drg
