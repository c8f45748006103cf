#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gstrat/dsl.hpp"

namespace {

using gstrat::dsl::EvalError;
using gstrat::dsl::ParseError;

constexpr int kEvalFailure = 1;
constexpr int kParseFailure = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int write_results(const std::vector<std::string>& results, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kEvalFailure;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  for (const auto& r : results) os << r << '\n';
  return 0;
}

int run_repl(const gstrat::dsl::EvalOptions& options) {
  gstrat::dsl::Evaluator evaluator(options);
  std::string history;  // accepted statements, reparsed so bindings stay visible
  std::size_t done = 0;
  std::string pending;
  std::string line;
  while (std::cout << (pending.empty() ? "strat> " : "  ...> ") << std::flush,
         std::getline(std::cin, line)) {
    pending += line + "\n";
    if (line.find(';') == std::string::npos) continue;
    try {
      const auto script = gstrat::dsl::parse(history + pending);
      gstrat::dsl::Script fresh;
      fresh.stmts.assign(script.stmts.begin() + static_cast<std::ptrdiff_t>(done),
                         script.stmts.end());
      for (const auto& r : evaluator.run(fresh)) std::cout << r << '\n';
      history += pending;
      done = script.stmts.size();
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << '\n';
    } catch (const EvalError& e) {
      std::cerr << "evaluation error: " << e.what() << '\n';
    }
    pending.clear();
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strat: build and inspect G-stratified spaces"};
  app.require_subcommand(1);

  std::string emit;
  std::string out_path;
  gstrat::dsl::EvalOptions options;
  app.add_option("--emit", emit, "Render printed spaces as dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  app.add_option("--out", out_path, "Write results to a file");
  app.add_option("--samples", options.samples, "Sample count for model checks");
  app.add_option("--seed", options.seed, "Seed for deterministic sampling");

  std::string file;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a script")->fallthrough();
  eval_cmd->add_option("file", file, "Script path")->required();
  auto* check_cmd = app.add_subcommand("check", "Parse a script without evaluating")->fallthrough();
  check_cmd->add_option("file", file, "Script path")->required();
  auto* repl_cmd = app.add_subcommand("repl", "Interactive session")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseFailure;
  }
  if (!emit.empty()) options.emit = emit;

  if (repl_cmd->parsed()) return run_repl(options);

  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read " << file << '\n';
    return kEvalFailure;
  }
  gstrat::dsl::Script script;
  try {
    script = gstrat::dsl::parse(text);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << '\n';
    return kParseFailure;
  }
  if (check_cmd->parsed()) {
    std::cerr << file << ": ok, " << script.stmts.size() << " statements\n";
    return 0;
  }
  try {
    return write_results(gstrat::dsl::eval(script, options), out_path);
  } catch (const EvalError& e) {
    std::cerr << file << ":" << e.what() << '\n';
    return kEvalFailure;
  }
}
