// polyzeta: generate the Xi/Lambda polynomials and run the verification suites.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyzeta/cli/commands.hpp"
#include "polyzeta/errors.hpp"

using namespace polyzeta;

int main(int argc, char** argv) {
  CLI::App app{"Exact generation and verification of the Xi_n / Lambda_n polynomial families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  GlobalOptions g;
  std::string out_path;
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the report timestamp (byte-identical output)");
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads (0: number of processors)")->check(CLI::NonNegativeNumber);

  std::string family = "xi", format = "json", suite = "all";
  int n = 0, n_max = 0, digits = 30, width_bits = 80;
  bool force = false;

  auto* gen = app.add_subcommand("gen", "Emit the coefficients of Xi_n or Lambda_n");
  gen->add_option("--family", family, "xi | lambda")->required();
  gen->add_option("--n", n, "Index n (1..64)")->required();
  gen->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");
  verify->add_option("--suite", suite, "structural | roots | integral | all")
      ->check(CLI::IsMember({"structural", "roots", "integral", "all"}));
  verify->add_option("--n-max", n_max, "Largest index to verify")->required();
  verify->add_option("--digits", digits, "Decimal digits of numeric precision (default 30)");
  verify->add_flag("--force", force, "Allow n-max above the per-suite caps");

  auto* roots = app.add_subcommand("roots", "Isolate the real roots of the adapted polynomial");
  roots->add_option("--family", family, "xi | lambda")->required();
  roots->add_option("--n", n, "Index n")->required();
  roots->add_option("--width-bits", width_bits, "Refine intervals to width 2^-W (default 80)");
  roots->add_flag("--force", force, "Allow n above the default cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  if (!out_path.empty()) g.out = out_path;

  try {
    if (*gen) {
      return cmd_gen(parse_family(family), n, format == "csv" ? GenFormat::Csv : GenFormat::Json, g, std::cout);
    }
    if (*verify) return cmd_verify(suite, n_max, digits, force, g, std::cout);
    if (*roots) return cmd_roots(parse_family(family), n, width_bits, force, g, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
