#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatcomm {

/// Operation is not available for the scalar backend it was invoked with
/// (e.g. an irrational norm requested from the exact backend).
class mode_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Tuple-size violation: empty tuple, or fewer elements than the operation needs.
class arity_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed a configured desk-scale cap (factorial blowup guard).
class size_limit_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Caller violated a documented precondition.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Literal syntax error. position() is a 0-based byte offset into the input.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace quatcomm
