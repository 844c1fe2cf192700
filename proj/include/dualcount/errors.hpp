#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualcount {

/// Raised for inputs outside the supported mathematical scope (CLI exit code 3).
class Unsupported : public std::runtime_error {
public:
  explicit Unsupported(const std::string& what) : std::runtime_error("unsupported: " + what) {}
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Internal consistency check failed; indicates a bug or corrupt table.
class VerificationFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace dualcount
