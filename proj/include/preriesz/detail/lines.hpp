#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "preriesz/error.hpp"

namespace preriesz::detail {

struct Line {
  std::size_t number = 0;
  std::string text;
};

/// Significant lines of an exchange file: `#` starts a comment, blank lines
/// are skipped, surrounding whitespace is trimmed.
class LineSource {
 public:
  explicit LineSource(std::string_view text);

  std::optional<Line> next();
  /// Next line, or a FormatError naming `expected` at end of input.
  Line require(const std::string& expected);
  bool done() const noexcept { return pos_ >= lines_.size(); }
  std::size_t last_line() const noexcept { return last_; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

/// Runs `f`, attaching the line number to any FormatError that lacks one.
template <class F>
auto at_line(const Line& line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError& e) {
    if (e.line() != 0) throw;
    throw FormatError(line.number, e.what());
  }
}

}  // namespace preriesz::detail
