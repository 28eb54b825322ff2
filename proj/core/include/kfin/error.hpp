#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group spec or element text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a precondition (bad parameter, element/spec mismatch,
/// a table that is not a group).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured cap (enumeration size, ball size) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The request is outside what the supported families can certify.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace kfin
