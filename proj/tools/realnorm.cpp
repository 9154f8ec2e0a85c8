#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "realnorm/cli.hpp"
#include "realnorm/corpus.hpp"

namespace {

using realnorm::Report;
using realnorm::RunOptions;

void emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.body.dump(2) << "\n";
  } else {
    realnorm::render_text(rep.body, std::cout);
  }
}

Report run_file(const std::string& command, const std::string& path, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    return realnorm::make_report(command, path, opts, [&]() -> realnorm::CommandResult {
      throw realnorm::Error(realnorm::ErrorKind::parse, "cannot read '" + path + "'");
    });
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return realnorm::run_document(command, buf.str(), path, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central seminormality and continuous rational function toolkit"};
  app.set_version_flag("--version", realnorm::kToolVersion);
  app.require_subcommand(1);

  std::string format = "text";
  RunOptions opts;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "Seed for random linear changes and sample values");
  app.add_option("--max-steps", opts.max_steps, "Buchberger step budget per basis computation");

  std::string path;
  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "Singular points, centrality and seminormality"},
      {"adjoin", "Presentation of the ring with the candidates adjoined"},
      {"fiber", "Fibers of the extension over POINTS"},
      {"continuity", "Central bijectivity test for each candidate"},
      {"wc-search", "Fixed-point search for the w_c closure of the candidates"},
      {"hereditary", "Degree of the extension restricted to RESTRICT"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Input document")->required();
  }
  app.add_subcommand("verify-paper", "Run the built-in regression corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : realnorm::exit_input_error;
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Report rep = command == "verify-paper" ? realnorm::corpus::verify_paper(opts) : run_file(command, path, opts);
  emit(rep, format);
  return rep.exit_code;
}
