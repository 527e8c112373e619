// symsq: command-line front end for the workbench.  Every subcommand prints a
// JSON report (or writes it to --out) and exits 0 iff no check failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "symsq/workbench.hpp"

int main(int argc, char** argv) {
  using namespace symsq;
  CLI::App app{"Local symmetric-square factors for GL(2) and metaplectic identity checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input_path, out_path;
  bool timing = false, serial = false;
  app.add_option("--p", cfg.p, "odd prime")->capture_default_str();
  app.add_option("--precision", cfg.precision, "p-adic precision N")->capture_default_str();
  app.add_option("--tol", cfg.tol, "complex comparison tolerance")->capture_default_str();
  app.add_option("--root-tol", cfg.root_tol, "root clustering tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for every randomized check")->capture_default_str();
  app.add_option("--samples", cfg.samples, "samples per randomized property")->capture_default_str();
  app.add_option("--input", input_path, "JSON descriptor file")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--timing", timing, "include per-check timings (breaks byte-identical reports)");
  app.add_flag("--serial", serial, "use the serial reference kernels");

  std::vector<std::string> names = subcommands();
  names.push_back("suite");
  for (const auto& n : names)
    app.add_subcommand(n, n == "suite" ? "run every check" : "run the " + n + " checks")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string sub = app.get_subcommands().front()->get_name();
  kernels::use_parallel(!serial);

  try {
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      cfg.input = json::parse(in);
    }
    const Report report = run(sub, cfg);
    const std::string text = report.to_json(timing).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream(out_path) << text;
      const json summary = report.to_json(false)["summary"];
      std::cerr << sub << ": " << summary.dump() << "\n";
    }
    return report.ok() ? 0 : 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
  } catch (const UnsupportedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
