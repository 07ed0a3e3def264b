#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circech {

// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the brute-force oracles when an instance exceeds their guards.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed point file; carries the 1-based offending line.
class PointFileError : public std::runtime_error {
 public:
  PointFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace circech
