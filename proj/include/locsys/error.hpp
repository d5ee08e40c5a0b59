#pragma once

#include <stdexcept>
#include <string>

namespace locsys {

enum class ErrorKind {
  parse,
  precondition,
  theorem_inapplicable,
  budget,
};

/// Exception carrying a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace locsys
