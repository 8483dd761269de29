#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semidual/commands.hpp"

namespace {

// "-" reads standard input.
bool read_input(std::string const& path, std::string& out) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    buf << in.rdbuf();
  }
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite duality toolkit for semilattices and monotone semilattices"};
  app.require_subcommand(1);

  semidual::CommandOptions options;
  std::string dot_path;
  bool quiet = false;
  bool json = true;
  app.add_option("--dot", dot_path, "Write Graphviz diagrams to this path");
  app.add_option("--seed", options.seed, "Seed for sampled S4 checks")->capture_default_str();
  app.add_option("--limit", options.limit, "Exhaustive S4 cap on |S(X)|; sampled above it")->capture_default_str();
  app.add_flag("--all", options.all, "verify-all: run every suite instead of stopping at the first counterexample");
  app.add_flag("--json", json, "Emit the JSON report (default)");
  app.add_flag("--quiet", quiet, "Suppress the report; only the exit code and errors on stderr");

  std::string input;
  std::string map_name;
  for (auto const& name : semidual::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "enumerate") {
      sub->add_option("n", input, "Number of elements")->required();
      sub->add_flag("--verify", options.verify, "Run verify-all on every instance");
    } else {
      sub->add_option("document", input, "JSON document, or - for stdin")->required();
    }
    if (name == "extend") sub->add_option("--map", map_name, "Extend only this map");
  }

  CLI11_PARSE(app, argc, argv);

  auto const command = app.get_subcommands().front()->get_name();
  if (!map_name.empty()) options.map = map_name;
  std::string text = input;
  if (command != "enumerate" && !read_input(input, text)) {
    std::cerr << "semidual: cannot read " << input << "\n";
    return semidual::kParse;
  }

  auto const result = semidual::run_command(command, text, options);
  if (!quiet && json) std::cout << result.report.dump(2) << "\n";
  if (result.exit_code != semidual::kOk) {
    for (auto const& c : result.report["checks"]) {
      if (c["pass"].get<bool>()) continue;
      std::cerr << "semidual: " << c["name"].get<std::string>() << ": " << c["witness"].get<std::string>() << "\n";
      break;
    }
  }
  if (!dot_path.empty() && !result.dot.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cerr << "semidual: cannot write " << dot_path << "\n";
      return semidual::kParse;
    }
    out << result.dot;
  }
  return result.exit_code;
}
