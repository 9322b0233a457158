// chenruan: computes orbifold invariants of parabolic moduli quotients by
// the r-torsion of the Jacobian and prints a JSON or plain-text report.

#include <iostream>

#include <CLI11.hpp>

#include "chenruan/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Chen-Ruan data of parabolic moduli modulo r-torsion of the Jacobian"};
  chenruan::RunConfig config;
  std::string emit = "census,components";
  std::string format = "json";
  app.add_option("--spec", config.spec_path, "Moduli spec (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--provider", config.provider_paths, "Betti table file (JSON); repeatable")
      ->check(CLI::ExistingFile);
  app.add_option("--emit", emit, "Comma-separated: census,components,shifts,cr_table,euler,product_rules")
      ->capture_default_str();
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("--oracle", config.oracle_mode, "Run brute-force cross-checks and append them to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.format = format == "table" ? chenruan::Format::Table : chenruan::Format::Json;
  try {
    config.outputs = chenruan::parse_outputs(emit);
  } catch (const chenruan::Error& e) {
    chenruan::Json error{{"error", {{"kind", "ParseError"}, {"message", e.what()}, {"exit_code", 2}}}};
    std::cout << error.dump(2) << "\n";
    return 2;
  }

  const auto result = chenruan::run(config);
  std::cout << result.document;
  return result.exit_code;
}
