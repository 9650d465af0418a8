#pragma once

#include <stdexcept>
#include <string>

namespace curvspec {

// Common base so callers can catch everything from this library at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed expression text; `offset` is the character position of the
// offending token in the input string.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Identifier that is neither a coordinate, a parameter, nor a known function.
class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier '" + name + "'") {}
};

// Evaluation outside the domain of a function (log/sqrt of a negative value).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Metric is degenerate or non-finite at the requested point.
class SingularPoint : public Error {
 public:
  explicit SingularPoint(const std::string& msg) : Error(msg) {}
};

// Plane spanned by (u, v) has (numerically) zero area element.
class DegeneratePlane : public Error {
 public:
  explicit DegeneratePlane(const std::string& msg) : Error(msg) {}
};

// Pair-space Gram matrix of the pencil is singular.
class DegeneratePencil : public Error {
 public:
  explicit DegeneratePencil(const std::string& msg) : Error(msg) {}
};

// Metric has a (numerically) zero eigenvalue, so no orthonormal frame exists.
class DegenerateMetric : public Error {
 public:
  explicit DegenerateMetric(const std::string& msg) : Error(msg) {}
};

// Operation only defined for a specific dimension (e.g. the 4D block check).
class WrongDimension : public Error {
 public:
  explicit WrongDimension(const std::string& msg) : Error(msg) {}
};

// Requested built-in case name does not exist.
class UnknownCase : public Error {
 public:
  explicit UnknownCase(const std::string& name)
      : Error("unknown built-in case '" + name + "'") {}
};

// Built-in case parameters outside their admissible range.
class BadParams : public Error {
 public:
  explicit BadParams(const std::string& msg) : Error(msg) {}
};

}  // namespace curvspec
