#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chenruan/cr_assembly.hpp"
#include "chenruan/error.hpp"
#include "chenruan/json_io.hpp"
#include "chenruan/moduli_spec.hpp"

namespace chenruan {

enum class Output { Census, Components, Shifts, CrTable, Euler, ProductRules };
enum class Format { Json, Table };

struct RunConfig {
  std::string spec_path;
  std::vector<std::string> provider_paths;
  std::vector<Output> outputs;
  Format format = Format::Json;
  bool oracle_mode = false;
};

struct RunResult {
  std::string document;
  int exit_code = 0;
};

/// Hard limits; exceeding one is an error, never a truncation.
inline constexpr std::int64_t kOracleMaxGroupOrder = 10'000'000;
inline constexpr std::int64_t kOracleMaxPartitions = 1'000'000;
inline constexpr std::int64_t kMaxEnumeratedPartitions = 10'000'000;

/// Comma-separated subset of census,components,shifts,cr_table,euler,product_rules.
std::vector<Output> parse_outputs(std::string_view list);
std::string_view to_string(Output output);

int exit_code_for(ErrorKind kind);

/// Builds the report document; throws Error on failure.
Json build_report(const ModuliSpec& spec, const BettiProvider& provider, const std::vector<Output>& outputs,
                  bool oracle_mode);

/// Plain-text rendering of a report document.
std::string render_table(const Json& report);

/// Never throws: failures become {"error": {...}} documents with a non-zero
/// exit code. JSON output is byte-for-byte deterministic.
RunResult run(const RunConfig& config);

}  // namespace chenruan
