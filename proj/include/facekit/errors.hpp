#ifndef FACEKIT_ERRORS_HPP
#define FACEKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facekit {

// Malformed or inconsistent input, e.g. mismatched dimensions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not follow one of the file or point syntaxes. line is
// 1-based; 0 when the text was not read from a multi-line source.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line)
  {
  }
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A documented operation precondition does not hold (point outside the set,
// point not in the model, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size bound (face enumeration, double description) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request lies outside the decidable fragment the symbolic models support.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace facekit

#endif
