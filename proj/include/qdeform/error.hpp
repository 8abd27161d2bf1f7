#ifndef QDEFORM_ERROR_HPP
#define QDEFORM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

// Half-open byte range into an expression source string.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operand (or parameter) lies outside the real domain of a deformed
// operation: negative q-product operand, missing opposite/inverse,
// non-integer exponent over a negative base, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested parameter regime is excluded outright (for example the
// diamond product at q >= 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::size_t length,
             std::vector<std::string> expected)
      : Error(std::move(message)),
        offset(offset),
        length(length),
        expected(std::move(expected)) {}

  std::size_t offset;
  std::size_t length;
  std::vector<std::string> expected;
};

// A domain failure raised while evaluating a parsed expression; carries the
// span of the node that failed.
class EvalError : public Error {
 public:
  EvalError(std::string message, SourceSpan span)
      : Error(std::move(message)), span(span) {}

  SourceSpan span;
};

}  // namespace qdeform

#endif
