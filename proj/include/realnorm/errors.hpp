#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realnorm {

enum class ErrorKind {
  indivisible,
  unknown_variable,
  unsupported_size,
  zero_polynomial,
  resource_limit,
  not_zero_dimensional,
  shape_position_failure,
  unsupported_irrational,
  point_not_on_variety,
  non_homogeneous,
  precondition,
  parse,
  non_generic_specialization,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::indivisible: return "indivisible";
    case ErrorKind::unknown_variable: return "unknown-variable";
    case ErrorKind::unsupported_size: return "unsupported-size";
    case ErrorKind::zero_polynomial: return "zero-polynomial";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::not_zero_dimensional: return "not-zero-dimensional";
    case ErrorKind::shape_position_failure: return "shape-position-failure";
    case ErrorKind::unsupported_irrational: return "unsupported-irrational";
    case ErrorKind::point_not_on_variety: return "point-not-on-variety";
    case ErrorKind::non_homogeneous: return "non-homogeneous";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::non_generic_specialization: return "non-generic-specialization";
  }
  return "unknown";
}

/// Every failure raised by the toolkit carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace realnorm
