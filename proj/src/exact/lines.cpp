#include "preriesz/detail/lines.hpp"

namespace preriesz::detail {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

LineSource::LineSource(std::string_view text) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines_.push_back({number, std::string(raw)});
  }
  last_ = number;
}

std::optional<Line> LineSource::next() {
  if (done()) return std::nullopt;
  return lines_[pos_++];
}

Line LineSource::require(const std::string& expected) {
  if (auto l = next()) return *l;
  throw FormatError(last_ == 0 ? 1 : last_, "unexpected end of input, expected " + expected);
}

}  // namespace preriesz::detail
