#pragma once

#include <stdexcept>
#include <string>

namespace trihole {

enum class ErrorKind {
  kInvalidInput,  // malformed or inconsistent input
  kResourceCap,   // a configured size bound was exceeded
  kInternal,      // broken invariant inside the solver
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorKind::kInvalidInput, msg);
}

[[noreturn]] inline void throw_resource(const std::string& msg) {
  throw Error(ErrorKind::kResourceCap, msg);
}

[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(ErrorKind::kInternal, msg);
}

#define TRIHOLE_CHECK(cond, msg)                                     \
  do {                                                               \
    if (!(cond)) ::trihole::throw_internal(std::string("check failed: ") + \
                                           #cond + ": " + (msg));    \
  } while (0)

}  // namespace trihole
