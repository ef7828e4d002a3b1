#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasiramsey {

// Bad caller input: out-of-range vertices, overlapping sets, size mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// An exhaustive search would exceed its enumeration budget.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasiramsey
