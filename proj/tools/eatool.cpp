// eatool: command-line front end over the effalg C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "effalg/effalg.h"

namespace {

constexpr int kExitInput = 2;

struct Input {
  bool ok = false;
  std::string text;
  std::string error;
};

Input builtin_input(const std::string& name, bool spec) {
  char* out = nullptr;
  const ea_status s = spec ? ea_builtin_mvgen_spec(name.c_str(), &out) : ea_builtin_text(name.c_str(), &out);
  if (s != EA_OK) return {false, {}, ea_last_error()};
  Input in{true, out, {}};
  ea_string_free(out);
  return in;
}

// "@name" selects a builtin, anything else is a path ("-" is stdin).
Input read_input(const std::string& arg, bool spec) {
  if (!arg.empty() && arg[0] == '@') return builtin_input(arg.substr(1), spec);
  std::ostringstream ss;
  if (arg == "-") {
    ss << std::cin.rdbuf();
    return {true, ss.str(), {}};
  }
  std::ifstream f(arg, std::ios::binary);
  if (!f) return {false, {}, "cannot read '" + arg + "'"};
  ss << f.rdbuf();
  return {true, ss.str(), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite effect algebra workbench"};
  app.require_subcommand(1);

  bool machine = false;
  bool all_witnesses = false;
  long long budget = 10'000'000;
  app.add_flag("--machine", machine, "Emit key=value records instead of tables");
  app.add_flag("--all-witnesses", all_witnesses, "List every witness instead of the first");
  app.add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);

  struct Cmd {
    const char* name;
    const char* help;
    const char* arg_help;
  };
  const Cmd cmds[] = {
      {"validate", "Check the effect algebra axioms", "algebra file or @builtin"},
      {"classify", "Per-element classes and the distinguished sets", "algebra file or @builtin"},
      {"props", "Global properties", "algebra file or @builtin"},
      {"blocks", "Blocks of a homogeneous algebra and the MV cover check", "algebra file or @builtin"},
      {"theorems", "Check the structure theorems on this instance", "algebra file or @builtin"},
      {"scan-joins", "Compare block-local joins across blocks", "algebra file or @builtin"},
      {"dot", "Hasse diagram in DOT", "algebra file or @builtin"},
      {"example", "Print a builtin algebra (ex1, ex2, ex3, chain:n, boolean:n)", "builtin name"},
      {"mvgen", "Generate a sub-algebra of a product of unit intervals", "spec file or @ex1/@ex2/@ex3"},
  };
  std::string argument;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", argument, c.arg_help)->required();
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string input = argument;
  if (command != "example") {
    const Input in = read_input(argument, command == "mvgen");
    if (!in.ok) {
      std::cerr << "error: " << in.error << "\n";
      return kExitInput;
    }
    input = in.text;
  }

  const ea_options opt{machine ? 1 : 0, all_witnesses ? 1 : 0, budget};
  char* text = nullptr;
  int code = 0;
  if (ea_run(command.c_str(), input.c_str(), &opt, &text, &code) != EA_OK) {
    std::cerr << "error: " << ea_last_error() << "\n";
    return kExitInput;
  }
  std::fputs(text, code >= kExitInput ? stderr : stdout);
  ea_string_free(text);
  return code;
}
