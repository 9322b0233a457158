#include "chenruan/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "chenruan/error.hpp"

namespace chenruan {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON at " + location(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

const Json& field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorKind::ParseError, where + ": missing key \"" + key + "\"");
  }
  return object.at(key);
}

std::int64_t integer_field(const Json& object, const char* key, const std::string& where) {
  const auto& value = field(object, key, where);
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::ParseError, where + ": \"" + key + "\" must be an integer");
  }
  return value.get<std::int64_t>();
}

bool bool_field(const Json& object, const char* key, const std::string& where) {
  const auto& value = field(object, key, where);
  if (!value.is_boolean()) {
    throw Error(ErrorKind::ParseError, where + ": \"" + key + "\" must be a boolean");
  }
  return value.get<bool>();
}

}  // namespace

RawModuliSpec parse_spec(std::string_view text) {
  const Json doc = parse_document(text);
  const std::string where = "spec";
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "spec must be a JSON object");
  RawModuliSpec raw;
  raw.genus = integer_field(doc, "genus", where);
  raw.rank = integer_field(doc, "rank", where);
  raw.degree = integer_field(doc, "degree", where);
  raw.num_points = integer_field(doc, "num_points", where);
  raw.higgs = bool_field(doc, "higgs", where);
  raw.assume_generic = bool_field(doc, "assume_generic", where);
  if (doc.contains("chamber")) {
    if (!doc.at("chamber").is_string()) {
      throw Error(ErrorKind::ParseError, "spec: \"chamber\" must be a string");
    }
    raw.chamber = doc.at("chamber").get<std::string>();
  }
  const auto& weights = field(doc, "weights", where);
  if (!weights.is_array()) throw Error(ErrorKind::ParseError, "spec: \"weights\" must be an array");
  for (std::size_t p = 0; p < weights.size(); ++p) {
    const auto& list = weights[p];
    if (!list.is_array()) {
      throw Error(ErrorKind::ParseError, "spec: weights[" + std::to_string(p) + "] must be an array");
    }
    std::vector<Rational> parsed;
    for (const auto& entry : list) {
      if (!entry.is_string()) {
        throw Error(ErrorKind::ParseError,
                    "spec: weights[" + std::to_string(p) + "] entries must be \"p/q\" strings");
      }
      parsed.push_back(parse_rational(entry.get<std::string>()));
    }
    raw.weights.push_back(std::move(parsed));
  }
  return raw;
}

ModuliSpec load_spec(const std::string& path) { return validate_moduli_spec(parse_spec(read_file(path))); }

BettiProvider parse_provider(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "Betti table file must be a JSON array");
  BettiProvider provider;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const std::string where = "table[" + std::to_string(i) + "]";
    BettiKey key;
    key.genus = integer_field(entry, "genus", where);
    key.rank = integer_field(entry, "rank", where);
    key.points = integer_field(entry, "points", where);
    const auto& chamber = field(entry, "chamber", where);
    if (!chamber.is_string()) throw Error(ErrorKind::ParseError, where + ": \"chamber\" must be a string");
    key.chamber = chamber.get<std::string>();
    const auto& coefficients = field(entry, "coefficients", where);
    if (!coefficients.is_array()) {
      throw Error(ErrorKind::ParseError, where + ": \"coefficients\" must be an array");
    }
    std::vector<BigInt> values;
    for (const auto& c : coefficients) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw Error(ErrorKind::ParseError, where + ": coefficients must be non-negative integers");
      }
      values.emplace_back(c.get<std::int64_t>());
    }
    try {
      provider.add(key, PoincareSeries(std::move(values)));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  return provider;
}

BettiProvider load_provider(const std::string& path) { return parse_provider(read_file(path)); }

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json to_json(const Rational& value) { return Json(to_fraction_string(value)); }

Json to_json(const TorsionElement& eta) {
  return Json{{"modulus", eta.modulus()}, {"exponents", eta.exponents()}};
}

Json to_json(const ModuliSpec& spec) {
  Json weights = Json::array();
  for (const auto& list : spec.weights()) {
    Json row = Json::array();
    for (const auto& w : list) row.push_back(to_json(w));
    weights.push_back(std::move(row));
  }
  return Json{{"genus", spec.genus()},
              {"rank", spec.rank()},
              {"degree", spec.degree()},
              {"num_points", spec.num_points()},
              {"weights", std::move(weights)},
              {"higgs", spec.higgs()},
              {"assume_generic", spec.assume_generic()},
              {"chamber", spec.chamber()},
              {"capabilities",
               {{"coprime_rank_degree", spec.capabilities().coprime_rank_degree},
                {"squarefree_rank", spec.capabilities().squarefree_rank}}},
              {"moduli_dimension", moduli_dimension(spec)}};
}

Json to_json(const ComponentReport& report) {
  Json out{{"eta_order", report.eta_order},
           {"partition_count", to_json(report.partition_count)},
           {"components_per_partition", report.components_per_partition},
           {"total_components", to_json(report.total_components)}};
  out["gamma_classes"] = report.gamma_classes ? to_json(*report.gamma_classes) : Json("unavailable");
  out["free_transitive_subgroup_order"] =
      report.free_transitive_subgroup_order ? Json(*report.free_transitive_subgroup_order) : Json("unavailable");
  return out;
}

Json to_json(const PoincareSeries& series) {
  Json out = Json::array();
  for (const auto& c : series.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalGradedDimension& table) {
  Json rows = Json::array();
  for (const auto& [grade, dim] : table.entries()) {
    rows.push_back(Json{{"grade", to_json(grade)}, {"dim", to_json(dim)}});
  }
  return rows;
}

Json partition_to_json(const ModuliSpec& spec, const WeightPartition& t) {
  Json out = Json::array();
  for (std::int64_t p = 0; p < t.num_points(); ++p) {
    const auto& weights = spec.weights_at(static_cast<std::size_t>(p));
    Json point = Json::array();
    for (const auto& block : t.blocks(static_cast<std::size_t>(p))) {
      Json entries = Json::array();
      for (int k : block) entries.push_back(to_json(weights[static_cast<std::size_t>(k)]));
      point.push_back(std::move(entries));
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace chenruan
