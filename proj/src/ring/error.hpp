#pragma once

#include <stdexcept>
#include <string>

namespace refsev {

// Error categories; the C API maps these one-to-one onto status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kDomain = 2,
  kTruncation = 3,
  kCache = 4,
  kLimit = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace refsev
