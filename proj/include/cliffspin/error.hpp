#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffspin {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or domain violation (signature mismatch, non-invertible
/// versor, singular reconstruction, ...).  The CLI maps this to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A syntax or range error in multivector text input.  Carries the byte
/// offset of the offending character.  The CLI maps this to exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cliffspin
