#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lietrees {

/// Precondition violation on an otherwise well-formed call.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input; `position()` is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A request that would exceed a configured computational cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lietrees
