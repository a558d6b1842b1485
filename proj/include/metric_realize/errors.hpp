#ifndef METRIC_REALIZE_ERRORS_HPP
#define METRIC_REALIZE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metric_realize {

/// Malformed or invalid user data: bad numerics, asymmetric matrices,
/// nonpositive weights, self-loops, disconnected graphs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class TriangleViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An exhaustive search was asked to run above its size guard.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A recognizer's verdict contradicts its own reconstruction.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metric_realize

#endif  // METRIC_REALIZE_ERRORS_HPP
