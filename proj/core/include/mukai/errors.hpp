#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

/// Two operands belong to different spaces (or mismatched factors).
struct SpaceMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structural misuse: wrong grading, non-tensor owner, malformed builder input.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The Poincare pairing of a ring is singular; the space model is broken.
struct DegenerateRing : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requested object is outside the hand-coded classical catalog.
struct OutOfCatalog : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed CLI specification record or rational literal.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mukai
