#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preriesz {

/// Malformed exchange-format input. Carries the 1-based line number when known.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// The requested value exists mathematically but has no finite descriptor here.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction violated one of its documented invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace preriesz
