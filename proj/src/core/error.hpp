#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defcalc {

enum class ErrorKind {
  Parse,    // malformed input text; carries a byte offset
  Domain,   // precondition violated (bad prime, parent mismatch, ...)
  Budget,   // enumeration would exceed the configured element budget
  Check,    // a verification found a counterexample witness
  Internal, // invariant broken inside the library itself
};

class Error : public std::runtime_error {
public:
  static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, std::string message, std::size_t position = no_position)
      : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  ErrorKind kind_;
  std::size_t position_;
};

[[noreturn]] inline void fail_parse(std::string msg, std::size_t pos) {
  throw Error(ErrorKind::Parse, std::move(msg), pos);
}
[[noreturn]] inline void fail_domain(std::string msg) {
  throw Error(ErrorKind::Domain, std::move(msg));
}
[[noreturn]] inline void fail_budget(std::string msg) {
  throw Error(ErrorKind::Budget, std::move(msg));
}
[[noreturn]] inline void fail_internal(std::string msg) {
  throw Error(ErrorKind::Internal, std::move(msg));
}

} // namespace defcalc
