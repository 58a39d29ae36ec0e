#include "preriesz/detail/cursor.hpp"

#include <cctype>
#include <charconv>

#include "preriesz/error.hpp"

namespace preriesz::detail {

void Cursor::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

bool Cursor::peek(char c) {
  skip_ws();
  return pos_ < text_.size() && text_[pos_] == c;
}

bool Cursor::peek_word(std::string_view word) {
  skip_ws();
  return text_.substr(pos_, word.size()) == word;
}

bool Cursor::consume(char c) {
  if (!peek(c)) return false;
  ++pos_;
  return true;
}

bool Cursor::consume_word(std::string_view word) {
  if (!peek_word(word)) return false;
  pos_ += word.size();
  return true;
}

void Cursor::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

void Cursor::expect_word(std::string_view word) {
  if (!consume_word(word)) fail("expected '" + std::string(word) + "'");
}

std::string_view Cursor::number_token() {
  skip_ws();
  const std::size_t start = pos_;
  while (pos_ < text_.size() &&
         (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '/')) {
    ++pos_;
  }
  if (start == pos_) fail("expected a number");
  return text_.substr(start, pos_ - start);
}

Scalar Cursor::scalar() { return Scalar::parse(number_token()); }

std::int64_t Cursor::integer() {
  const auto tok = number_token();
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("malformed integer '" + std::string(tok) + "'");
  return v;
}

std::size_t Cursor::natural() {
  const auto v = integer();
  if (v < 0) fail("expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string_view Cursor::word() {
  skip_ws();
  const std::size_t start = pos_;
  while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  return text_.substr(start, pos_ - start);
}

std::string_view Cursor::rest() {
  skip_ws();
  auto r = text_.substr(pos_);
  pos_ = text_.size();
  return r;
}

void Cursor::fail(const std::string& what) const {
  throw FormatError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
}

}  // namespace preriesz::detail
