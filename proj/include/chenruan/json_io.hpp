#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chenruan/cr_assembly.hpp"
#include "chenruan/fixed_loci.hpp"
#include "chenruan/graded.hpp"
#include "chenruan/moduli_spec.hpp"
#include "chenruan/partitions.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan {

using Json = nlohmann::ordered_json;

/// Spec file: {"genus", "rank", "degree", "num_points", "weights": [["p/q", ...], ...],
/// "higgs", "assume_generic"} plus an optional "chamber" label.
RawModuliSpec parse_spec(std::string_view text);
ModuliSpec load_spec(const std::string& path);

/// Betti table file: [{"genus", "rank", "points", "chamber", "coefficients": [...]}, ...].
BettiProvider parse_provider(std::string_view text);
BettiProvider load_provider(const std::string& path);

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings.
Json to_json(const BigInt& value);
Json to_json(const Rational& value);
Json to_json(const TorsionElement& eta);
Json to_json(const ModuliSpec& spec);
Json to_json(const ComponentReport& report);
Json to_json(const PoincareSeries& series);
/// Rows {"grade": "p/q", "dim": n} in increasing grade.
Json to_json(const RationalGradedDimension& table);
/// Per point, per block (Galois order), the weights as rational strings.
Json partition_to_json(const ModuliSpec& spec, const WeightPartition& t);

}  // namespace chenruan
