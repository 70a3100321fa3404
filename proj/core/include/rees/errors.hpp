#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rees {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: non-homogeneous entries, height < 2, bad degrees.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text that does not follow the grammar. `position` is the
/// zero-based offset into the input where parsing stopped.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A caller violated an operation's precondition.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An invariant that valid inputs guarantee was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rees
