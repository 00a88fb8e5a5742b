#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

// Malformed input document (edge list or tree file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates an operation precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation requires a connected graph.
class DisconnectedError : public ValidationError {
 public:
  DisconnectedError(std::string message, std::string unreachable_a,
                    std::string unreachable_b)
      : ValidationError(std::move(message)),
        vertex_a(std::move(unreachable_a)),
        vertex_b(std::move(unreachable_b)) {}

  std::string vertex_a;
  std::string vertex_b;
};

// Exhaustive computation would exceed its configured bound.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(std::string message, long long limit)
      : std::runtime_error(std::move(message)), limit(limit) {}

  long long limit;
};

}  // namespace kemeny
