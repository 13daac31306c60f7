#ifndef RLCT_ERRORS_HPP
#define RLCT_ERRORS_HPP

#include <stdexcept>

namespace rlct {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mismatched ambient dimensions between polynomials, points or models.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A membership query hit a real divisor without a monomial weight vector.
class UnsupportedModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rlct

#endif  // RLCT_ERRORS_HPP
