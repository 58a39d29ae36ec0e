#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "preriesz/cli.hpp"

int main(int argc, char** argv) {
  using namespace preriesz::cli;

  CLI::App app{"Exact decision procedures and certificates for column-finite matrices on eventually constant sequences.\n"
               "Set PRERIESZ_VERBOSE to 0 (verdict only), 1 (steps) or 2 (steps and data, default)."};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  std::string output = "text";
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--horizon", cmd.horizon, "Search horizon for the Example 18 refuter (0 = default)");

  std::string id;
  std::vector<std::string> files;
  std::string file;
  const auto one_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Exchange-format input")->required();
    return sub;
  };
  one_file("check", "Positivity, regularity and order continuity of an lmatrix file");
  one_file("embed", "Print F(A) for an lmatrix file");
  one_file("preimage", "Invert F on a covermatrix file");
  one_file("refute-majorant", "Refute that an lmatrix file majorizes the built-in operator T");
  auto* meet = app.add_subcommand("meet", "Pointwise meet of two covermatrix files");
  meet->add_option("files", files, "Two exchange-format inputs")->required()->expected(2);
  auto* example = app.add_subcommand("example", "Replay a counterexample");
  example->add_option("id", id, "Example id")->required()->check(CLI::IsMember({"18", "21", "22", "23"}));

  CLI11_PARSE(app, argc, argv);

  const auto* sub = app.get_subcommands().front();
  cmd.verb = *parse_verb(sub->get_name());
  cmd.output = output == "structured" ? OutputMode::structured : OutputMode::text;
  cmd.verbosity = verbosity_from_env(std::getenv("PRERIESZ_VERBOSE"));
  if (cmd.verb == Verb::meet) {
    cmd.targets = files;
  } else if (cmd.verb == Verb::example) {
    cmd.targets = {id};
  } else {
    cmd.targets = {file};
  }
  return dispatch(cmd, std::cout, std::cerr);
}
