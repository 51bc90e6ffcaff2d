#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gallai {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range vertices, bad generator parameters, missing edges.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `offset` is the byte position of the fault.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Strongly regular parameters that admit no valid spectrum.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace gallai
