#pragma once

#include <stdexcept>
#include <string>

namespace palace {

enum class ErrorKind {
  EmptyInput,
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  UnknownVertex,
  NotATree,
  Unsolvable,
  Precondition,
  VertexCapExceeded,
  DayCapExceeded,
  BudgetExceeded,
  NoEscape,
  RulesViolated,
  Internal,
  Io,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-checkable error category alongside the
/// human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace palace
