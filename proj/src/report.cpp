#include "chenruan/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chenruan/degree_shift.hpp"
#include "chenruan/fixed_loci.hpp"
#include "chenruan/oracle.hpp"
#include "chenruan/partitions.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan {

namespace {

constexpr std::string_view kMissing = "external-input-missing";

std::vector<std::int64_t> nontrivial_divisors(const ModuliSpec& spec) {
  auto all = divisors(spec.rank());
  all.erase(all.begin());
  return all;
}

Json key_to_json(const BettiKey& key) {
  return Json{{"genus", key.genus}, {"rank", key.rank}, {"points", key.points}, {"chamber", key.chamber}};
}

void require_enumerable(const ModuliSpec& spec, std::string_view what) {
  BigInt total = 0;
  for (const auto m : nontrivial_divisors(spec)) total += count_partitions(spec.rank(), m, spec.num_points());
  if (total > kMaxEnumeratedPartitions) {
    throw Error(ErrorKind::GuardrailExceeded,
                std::string(what) + " needs " + total.str() + " partitions; the limit is " +
                    std::to_string(kMaxEnumeratedPartitions));
  }
}

Json census_section(const ModuliSpec& spec) {
  Json orders = Json::array();
  BigInt total = 0;
  for (const auto m : divisors(spec.rank())) {
    const auto count = count_elements_of_order(spec.rank(), spec.genus(), m);
    total += count;
    orders.push_back(Json{{"order", m}, {"count", to_json(count)}});
  }
  return Json{{"operation", "count_elements_of_order"}, {"group_order", to_json(total)}, {"orders", orders}};
}

Json components_section(const ModuliSpec& spec) {
  Json rows = Json::array();
  for (const auto m : nontrivial_divisors(spec)) {
    const auto eta = canonical_element_of_order(spec, m);
    Json row{{"eta", to_json(eta)}};
    row.update(to_json(fixed_locus_components(spec, eta)));
    rows.push_back(std::move(row));
  }
  return Json{{"operation", "fixed_locus_components"}, {"by_order", rows}};
}

Json shifts_section(const ModuliSpec& spec) {
  require_shift_hypotheses(spec);
  require_enumerable(spec, "shift table");
  Json rows = Json::array();
  for (const auto m : nontrivial_divisors(spec)) {
    const auto eta = canonical_element_of_order(spec, m);
    const auto fixed_dim = fixed_component_dimension(spec, eta);
    for (const auto& rep : compute_orbit_section(spec, m).representatives) {
      const auto table = eigenvalue_multiplicities(spec, eta, rep);
      rows.push_back(Json{{"eta", to_json(eta)},
                          {"eta_order", m},
                          {"orbit_representative", partition_to_json(spec, rep)},
                          {"shift", to_json(degree_shift_value(table))},
                          {"multiplicities", table.multiplicities},
                          {"trivial_multiplicity", table.trivial_multiplicity},
                          {"fixed_component_dimension", fixed_dim},
                          {"total_codimension", table.codimension()}});
    }
  }
  return Json{{"operation", "degree_shift"}, {"rows", rows}};
}

Json cr_section(const ModuliSpec& spec, const BettiProvider& provider) {
  require_enumerable(spec, "Chen-Ruan table");
  const auto key = untwisted_key(spec);
  std::optional<PoincareSeries> untwisted;
  if (const auto* series = provider.find(key)) untwisted = *series;
  const auto table = chen_ruan_table(spec, provider, untwisted);

  Json out{{"operation", "chen_ruan_table"}};
  if (untwisted) {
    out["untwisted"] = Json{{"status", "supplied"}, {"key", key_to_json(key)}, {"series", to_json(*untwisted)}};
  } else {
    out["untwisted"] = Json{{"status", kMissing}, {"required_key", key_to_json(key)}};
  }
  Json sectors = Json::array();
  for (const auto& s : table.sectors) {
    sectors.push_back(Json{{"eta_order", s.order},
                           {"element_count", to_json(s.element_count)},
                           {"orbit_classes", s.sector.per_orbit.size()},
                           {"sector_euler", to_json(s.sector.euler_characteristic())},
                           {"sector_graded", to_json(s.sector.sector_graded)}});
  }
  out["sectors"] = std::move(sectors);
  out["twisted"] = to_json(table.twisted);
  out["rows"] = to_json(table.total);
  out["rows_complete"] = untwisted.has_value();
  return out;
}

Json euler_section(const ModuliSpec& spec, const BettiProvider& provider) {
  Json certificate = Json::array();
  for (const auto& entry : euler_certificate(spec, provider)) {
    certificate.push_back(Json{{"eta_order", entry.order},
                               {"element_count", to_json(entry.element_count)},
                               {"orbit_classes", to_json(entry.orbit_classes)},
                               {"prym_euler", to_json(entry.prym_euler)},
                               {"sector_euler", entry.sector_euler ? to_json(*entry.sector_euler) : Json(kMissing)},
                               {"vanishes", entry.vanishes}});
  }
  Json out{{"operation", "orbifold_euler"}};
  const auto key = untwisted_key(spec);
  if (const auto* series = provider.find(key)) {
    out["value"] = to_json(series->euler_characteristic());
    out["status"] = "supplied";
  } else {
    out["value"] = nullptr;
    out["status"] = kMissing;
    out["required_key"] = key_to_json(key);
  }
  out["certificate"] = std::move(certificate);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

Json product_rules_section(const ModuliSpec& spec) {
  Json by_order = Json::array();
  for (const auto m : nontrivial_divisors(spec)) {
    const auto count = count_elements_of_order(spec.rank(), spec.genus(), m);
    const auto generators = euler_phi(m);
    // Equal orders, distinct cyclic subgroups: forced zero.
    const BigInt forced = count * (count - generators);
    const auto eta = canonical_element_of_order(spec, m);
    by_order.push_back(Json{{"eta_order", m},
                            {"element_count", to_json(count)},
                            {"cyclic_subgroups", to_json(count / generators)},
                            {"forced_zero_ordered_pairs", to_json(forced)},
                            {"unknown_ordered_pairs", to_json(count * generators)},
                            {"self_product", product_support(eta, eta) == ProductSupport::Unknown ? "Unknown"
                                                                                               : "ForcedZero"},
                            {"pairing_with_inverse",
                             pairing_support(Rational(0), eta, eta.inverse(), spec) == PairingSupport::Candidate
                                 ? "Candidate"
                                 : "ForcedZero"}});
  }
  return Json{{"operation", "product_support/pairing_support"},
              {"prime_rank", is_prime(spec.rank())},
              {"pairing_rule", "Candidate iff tau = eta^-1, ForcedZero otherwise"},
              {"unequal_orders", "Unknown"},
              {"by_order", by_order}};
}

Json check(std::string name, bool pass, Json detail = nullptr) {
  Json out{{"check", std::move(name)}, {"pass", pass}};
  if (!detail.is_null()) out["detail"] = std::move(detail);
  return out;
}

Json oracle_section(const ModuliSpec& spec) {
  const BigInt group_order = ipow(BigInt(spec.rank()), 2 * spec.genus());
  if (group_order > kOracleMaxGroupOrder) {
    throw Error(ErrorKind::GuardrailExceeded,
                "oracle mode needs r^(2g) <= " + std::to_string(kOracleMaxGroupOrder) + ", got " + group_order.str());
  }
  for (const auto m : nontrivial_divisors(spec)) {
    if (count_partitions(spec.rank(), m, spec.num_points()) > kOracleMaxPartitions) {
      throw Error(ErrorKind::GuardrailExceeded,
                  "oracle mode needs at most " + std::to_string(kOracleMaxPartitions) + " partitions per order");
    }
  }
  Json checks = Json::array();

  const auto census = oracle::order_census(spec.rank(), spec.genus());
  bool census_ok = true;
  BigInt census_total = 0;
  for (const auto m : divisors(spec.rank())) {
    const auto it = census.find(m);
    const BigInt brute = it == census.end() ? BigInt(0) : it->second;
    census_ok = census_ok && brute == count_elements_of_order(spec.rank(), spec.genus(), m);
    census_total += count_elements_of_order(spec.rank(), spec.genus(), m);
  }
  checks.push_back(check("order_census", census_ok && census_total == group_order));

  const bool shifts_available = spec.capabilities().coprime_rank_degree &&
                                spec.capabilities().squarefree_rank && !spec.higgs();
  const std::int64_t s = spec.num_points();
  for (const auto m : nontrivial_divisors(spec)) {
    const std::int64_t l = spec.rank() / m;
    const std::string suffix = "[m=" + std::to_string(m) + "]";

    BigInt brute_count = 0;
    bool dominance_ok = true;
    oracle::for_each_partition(spec.rank(), m, s, [&](const oracle::Blocks& blocks) {
      ++brute_count;
      const auto t = WeightPartition::from_blocks(spec.rank(), blocks);
      for (std::int64_t i = 1; i < m; ++i) {
        dominance_ok = dominance_ok && dominance_count(t, i) == oracle::dominance(spec, blocks, i);
      }
    });
    const auto closed = count_partitions(spec.rank(), m, s);

    std::set<std::vector<std::vector<int>>> seen;
    bool no_duplicates = true;
    bool free_action = true;
    bool pairing_ok = true;
    bool bookkeeping_ok = true;
    bool invariance_ok = true;
    BigInt streamed = 0;
    const auto dim = moduli_dimension(spec);
    const auto fixed_dim = shifts_available ? fixed_component_dimension_for_order(spec, m) : 0;
    PartitionStream stream(spec, m);
    while (auto t = stream.next()) {
      ++streamed;
      std::vector<std::vector<int>> key;
      for (std::int64_t p = 0; p < s; ++p) key.push_back(t->labels(static_cast<std::size_t>(p)));
      no_duplicates = seen.insert(std::move(key)).second && no_duplicates;
      for (std::int64_t i = 1; i < m; ++i) {
        free_action = free_action && !(galois_rotate(*t, i) == *t);
        pairing_ok = pairing_ok && dominance_count(*t, i) + dominance_count(*t, m - i) == s * m * l * l;
      }
      if (shifts_available) {
        const auto table = eigenvalue_multiplicities(spec, *t);
        bookkeeping_ok = bookkeeping_ok && dim == fixed_dim + table.codimension();
        invariance_ok = invariance_ok && degree_shift_value(table) ==
                                             degree_shift_value(eigenvalue_multiplicities(spec, galois_rotate(*t, 1)));
      }
    }
    const auto section = compute_orbit_section(spec, m);

    checks.push_back(check("partition_count" + suffix, brute_count == closed && streamed == closed && no_duplicates,
                           Json{{"enumerated", to_json(brute_count)}, {"closed_form", to_json(closed)}}));
    checks.push_back(check("galois_action_free" + suffix,
                           free_action && BigInt(section.representatives.size()) * m == closed));
    checks.push_back(check("dominance_matches_weights" + suffix, dominance_ok));
    checks.push_back(check("dominance_pairing" + suffix, pairing_ok));
    if (shifts_available) {
      checks.push_back(check("dimension_bookkeeping" + suffix, bookkeeping_ok));
      checks.push_back(check("shift_orbit_invariance" + suffix, invariance_ok));
    } else {
      checks.push_back(Json{{"check", "dimension_bookkeeping" + suffix}, {"pass", nullptr}, {"detail", "skipped"}});
      checks.push_back(Json{{"check", "shift_orbit_invariance" + suffix}, {"pass", nullptr}, {"detail", "skipped"}});
    }
    checks.push_back(check("prym_euler_vanishes" + suffix, prym_poincare(spec.genus(), m).euler_characteristic() == 0));
  }
  bool all = true;
  for (const auto& c : checks) all = all && (c["pass"].is_null() || c["pass"].get<bool>());
  return Json{{"all_pass", all}, {"checks", checks}};
}

}  // namespace

std::string_view to_string(Output output) {
  switch (output) {
    case Output::Census: return "census";
    case Output::Components: return "components";
    case Output::Shifts: return "shifts";
    case Output::CrTable: return "cr_table";
    case Output::Euler: return "euler";
    case Output::ProductRules: return "product_rules";
  }
  return "";
}

std::vector<Output> parse_outputs(std::string_view list) {
  static constexpr Output kAll[] = {Output::Census, Output::Components, Output::Shifts,
                                    Output::CrTable, Output::Euler, Output::ProductRules};
  std::vector<Output> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    const auto item = list.substr(start, end - start);
    const auto* match = std::find_if(std::begin(kAll), std::end(kAll), [&](Output o) { return to_string(o) == item; });
    if (match == std::end(kAll)) {
      throw Error(ErrorKind::ParseError, "unknown output \"" + std::string(item) + "\"");
    }
    if (std::find(out.begin(), out.end(), *match) == out.end()) out.push_back(*match);
    start = end + 1;
  }
  // Sections always appear in canonical order.
  std::sort(out.begin(), out.end());
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapabilityMissing:
    case ErrorKind::ModeMismatch:
      return 3;
    case ErrorKind::TableMissing:
      return 4;
    case ErrorKind::GuardrailExceeded:
      return 5;
    case ErrorKind::NotDiagonalizable:
    case ErrorKind::FlagNotPreserved:
    case ErrorKind::FlagNotFull:
      return 1;
    default:
      return 2;
  }
}

Json build_report(const ModuliSpec& spec, const BettiProvider& provider, const std::vector<Output>& outputs,
                  bool oracle_mode) {
  if (outputs.empty()) throw Error(ErrorKind::ParseError, "at least one output must be requested");
  Json report{{"spec", to_json(spec)}};
  for (const auto output : outputs) {
    switch (output) {
      case Output::Census: report["census"] = census_section(spec); break;
      case Output::Components: report["components"] = components_section(spec); break;
      case Output::Shifts: report["shifts"] = shifts_section(spec); break;
      case Output::CrTable: report["cr_table"] = cr_section(spec, provider); break;
      case Output::Euler: report["euler"] = euler_section(spec, provider); break;
      case Output::ProductRules: report["product_rules"] = product_rules_section(spec); break;
    }
  }
  if (oracle_mode) report["oracle"] = oracle_section(spec);
  return report;
}

namespace {

std::string scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void render_rows(std::ostringstream& out, const Json& rows, const std::string& indent) {
  for (const auto& row : rows) out << indent << scalar(row["grade"]) << "\t" << scalar(row["dim"]) << "\n";
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  if (report.contains("error")) {
    out << "error: " << scalar(report["error"]["kind"]) << ": " << scalar(report["error"]["message"]) << "\n";
    return out.str();
  }
  const auto& spec = report["spec"];
  out << "genus " << spec["genus"] << ", rank " << spec["rank"] << ", degree " << spec["degree"] << ", "
      << spec["num_points"] << " parabolic point(s), dim " << spec["moduli_dimension"] << "\n";
  if (report.contains("census")) {
    out << "\n[census]\norder\tcount\n";
    for (const auto& row : report["census"]["orders"]) out << scalar(row["order"]) << "\t" << scalar(row["count"]) << "\n";
  }
  if (report.contains("components")) {
    out << "\n[components]\norder\tpartitions\tcomponents\tgamma_classes\n";
    for (const auto& row : report["components"]["by_order"]) {
      out << scalar(row["eta_order"]) << "\t" << scalar(row["partition_count"]) << "\t"
          << scalar(row["total_components"]) << "\t" << scalar(row["gamma_classes"]) << "\n";
    }
  }
  if (report.contains("shifts")) {
    out << "\n[shifts]\norder\tshift\tcodim\tmultiplicities\trepresentative\n";
    for (const auto& row : report["shifts"]["rows"]) {
      out << scalar(row["eta_order"]) << "\t" << scalar(row["shift"]) << "\t" << scalar(row["total_codimension"])
          << "\t" << row["multiplicities"].dump() << "\t" << row["orbit_representative"].dump() << "\n";
    }
  }
  if (report.contains("cr_table")) {
    const auto& cr = report["cr_table"];
    out << "\n[cr_table]\nuntwisted: " << scalar(cr["untwisted"]["status"]) << "\n";
    for (const auto& sector : cr["sectors"]) {
      out << "sector order " << scalar(sector["eta_order"]) << " x " << scalar(sector["element_count"]) << "\n";
      render_rows(out, sector["sector_graded"], "  ");
    }
    out << "grade\tdim\n";
    render_rows(out, cr["rows"], "");
  }
  if (report.contains("euler")) {
    const auto& euler = report["euler"];
    out << "\n[euler]\nvalue: " << (euler["value"].is_null() ? scalar(euler["status"]) : scalar(euler["value"])) << "\n";
    for (const auto& entry : euler["certificate"]) {
      out << "order " << scalar(entry["eta_order"]) << ": prym chi " << scalar(entry["prym_euler"]) << ", sector chi "
          << scalar(entry["sector_euler"]) << (entry["vanishes"].get<bool>() ? " (vanishes)" : " (FAILS)") << "\n";
    }
  }
  if (report.contains("product_rules")) {
    out << "\n[product_rules]\norder\tforced_zero_pairs\tunknown_pairs\n";
    for (const auto& row : report["product_rules"]["by_order"]) {
      out << scalar(row["eta_order"]) << "\t" << scalar(row["forced_zero_ordered_pairs"]) << "\t"
          << scalar(row["unknown_ordered_pairs"]) << "\n";
    }
  }
  if (report.contains("oracle")) {
    out << "\n[oracle]\n";
    for (const auto& c : report["oracle"]["checks"]) {
      const auto& pass = c["pass"];
      out << (pass.is_null() ? "SKIP" : (pass.get<bool>() ? "PASS" : "FAIL")) << "\t" << scalar(c["check"]) << "\n";
    }
  }
  return out.str();
}

RunResult run(const RunConfig& config) {
  Json document;
  int exit_code = 0;
  try {
    const auto spec = load_spec(config.spec_path);
    BettiProvider provider;
    for (const auto& path : config.provider_paths) provider.merge(load_provider(path));
    document = build_report(spec, provider, config.outputs, config.oracle_mode);
    if (config.oracle_mode && !document["oracle"]["all_pass"].get<bool>()) exit_code = 1;
  } catch (const Error& e) {
    exit_code = exit_code_for(e.kind());
    document = Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"exit_code", exit_code}}}};
  }
  if (config.format == Format::Table) return {render_table(document), exit_code};
  return {document.dump(2) + "\n", exit_code};
}

}  // namespace chenruan
