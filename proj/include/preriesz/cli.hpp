#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "preriesz/report.hpp"

namespace preriesz::cli {

enum class Verb { check, embed, meet, preimage, refute_majorant, example };
enum class OutputMode { text, structured };

std::optional<Verb> parse_verb(std::string_view name);
std::string_view verb_name(Verb v);

/// Report verbosity for text output: 0 prints the verdict only, 1 adds the
/// steps, 2 (the default) adds the data payloads.
int verbosity_from_env(const char* value);

struct Command {
  Verb verb = Verb::example;
  std::vector<std::string> targets;  ///< file paths, or the example id
  OutputMode output = OutputMode::text;
  std::size_t horizon = 0;           ///< 0 picks the default horizon
  int verbosity = 2;
};

/// A target file could not be read.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the command. Throws FormatError, RepresentationError or InputError on
/// bad input; the verdict itself never throws.
Report build_report(const Command& cmd);

std::string render_text(const Report& r, int verbosity = 2);
std::string render_structured(const Report& r);

/// Exit status: 0 when a verdict was computed, 1 on input or format errors,
/// 3 on internal errors.
int dispatch(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace preriesz::cli
