#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "preriesz/scalar.hpp"

namespace preriesz::detail {

/// Single-line tokenizer for the exchange format. Whitespace is insignificant
/// between tokens; all failures raise FormatError.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws();
  bool at_end();
  bool peek(char c);
  bool peek_word(std::string_view word);
  bool consume(char c);
  bool consume_word(std::string_view word);
  void expect(char c);
  void expect_word(std::string_view word);

  /// Token made of [-0-9/].
  std::string_view number_token();
  Scalar scalar();
  std::int64_t integer();
  std::size_t natural();
  /// Run of non-space characters.
  std::string_view word();
  std::string_view rest();

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace preriesz::detail
