#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ordinal term, formula, segment name or JSON document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured bound (truncation, oracle bound, piece cap, ...) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain an operation supports (ambient mismatch, unsupported segment, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordlim
