#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace persistd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (negative ε, c >= d, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// residuals() called on a pair that is not ordered J <= I.
class OrderingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// canonical_map_parts() called on a pair with no nonzero morphism.
class NoNonzeroMapError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A certificate was requested for modules at infinite distance.
class InfiniteDistanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A witness generator was given a module outside its source class.
class ClassMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The matcher refused an input that expands past the vertex cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input. `position()` is a byte offset into the
/// text that was being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

  /// The message without the position suffix, for re-wrapping with context.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace persistd
