// luroth: exact Morley invariants, Bateman configurations and Luroth quartics.
//
//   luroth psi --input config.json
//   luroth luroth --input roberts.json
//   luroth verify --suite homogeneity --seed 1 --count 20
//   luroth verify --input luroth-report.json
//
// Exit status: 0 all checks pass (or the input is degenerate), 1 a check
// failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "luroth/commands.hpp"
#include "luroth/suites.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw luroth::io::InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Morley invariants, Bateman configurations and Luroth quartics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input;
  auto* psi = app.add_subcommand("psi", "Q values, pfaffian and Morley invariant of seven points");
  psi->add_option("--input", input, "Configuration JSON file")->required();

  auto* lur = app.add_subcommand("luroth", "Luroth quartic and pentalateral from Roberts data");
  lur->add_option("--input", input, "Roberts data JSON file")->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  auto* verify = app.add_subcommand("verify", "Run a seeded property suite or re-check a luroth report");
  auto* suite_opt = verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(luroth::suite_names()));
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--count", count, "Number of cases")->capture_default_str();
  auto* report_opt = verify->add_option("--input", input, "JSON report written by the luroth command");
  suite_opt->excludes(report_opt);
  verify->callback([&] {
    if (suite.empty() && input.empty()) throw CLI::ValidationError("verify", "--suite or --input is required");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    luroth::RunReport report;
    if (psi->parsed()) {
      report = luroth::cmd_psi(read_file(input));
    } else if (lur->parsed()) {
      report = luroth::cmd_luroth(read_file(input));
    } else if (!suite.empty()) {
      report = luroth::cmd_verify(suite, seed, count);
    } else {
      report = luroth::cmd_verify_report(read_file(input));
    }
    if (format == "json") {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
