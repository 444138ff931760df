#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagkit {

// Base for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signature or component-count mismatch between ambient vectors.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Division by (near) zero or a branch point during evaluation.
class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

// Point or finite-difference stencil outside the declared parameter box.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Induced metric below the nondegeneracy threshold.
class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

// Least-squares sphere fit with a rank-deficient system.
class IndeterminateFit : public Error {
 public:
  using Error::Error;
};

// Unknown catalog name, name collision, arity mismatch and similar misuse.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  syntax,
  unknown_identifier,
  arity,
  undeclared_parameter,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        kind_(kind),
        line_(line),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lagkit
