#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpixp {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched objects: wrong arity, duplicate features,
// unknown tokens, a classifier table with missing rows.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The instance to explain violates a constraint.
class InfeasibleInstanceError : public PreconditionError {
 public:
  InfeasibleInstanceError(const std::string& message, std::string violated)
      : PreconditionError(message), violated_(std::move(violated)) {}
  const std::string& violated_nogood() const { return violated_; }

 private:
  std::string violated_;
};

// The constraint set admits no instance at all.
class UnsatisfiableConstraintsError : public Error {
 public:
  using Error::Error;
};

// The classifier assigns one class to the whole reference space.
class ConstantClassifierError : public Error {
 public:
  using Error::Error;
};

// Text input that does not conform to its grammar. `position` is a
// 0-based offset into the parsed text (or a 1-based row for CSV input).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cpixp
