#include "chenruan/cr_assembly.hpp"

#include "chenruan/error.hpp"
#include "chenruan/fixed_loci.hpp"

namespace chenruan {

namespace {

void check_element_fits(const ModuliSpec& spec, const TorsionElement& eta) {
  if (eta.modulus() != spec.rank() ||
      static_cast<std::int64_t>(eta.exponents().size()) != 2 * spec.genus()) {
    throw Error(ErrorKind::ModulusMismatch, "torsion element does not belong to this moduli problem");
  }
}

}  // namespace

std::string describe(const BettiKey& key) {
  return "(genus " + std::to_string(key.genus) + ", rank " + std::to_string(key.rank) + ", points " +
         std::to_string(key.points) + ", chamber \"" + key.chamber + "\")";
}

void BettiProvider::add(const BettiKey& key, PoincareSeries series) {
  if (key.rank < 1) throw Error(ErrorKind::InvalidArgument, "Betti table rank must be positive");
  if (series.is_zero()) throw Error(ErrorKind::InvalidArgument, "Betti table " + describe(key) + " is empty");
  const auto [it, inserted] = tables_.emplace(key, series);
  if (!inserted && !(it->second == series)) {
    throw Error(ErrorKind::InvalidArgument, "conflicting Betti tables for " + describe(key));
  }
}

void BettiProvider::merge(const BettiProvider& other) {
  for (const auto& [key, series] : other.tables_) add(key, series);
}

const PoincareSeries* BettiProvider::find(const BettiKey& key) const {
  const auto it = tables_.find(key);
  return it == tables_.end() ? nullptr : &it->second;
}

PoincareSeries prym_poincare(std::int64_t g, std::int64_t m) {
  const std::int64_t p = spectral_cover_data(g, m).prym_dim;
  std::vector<BigInt> coefficients;
  for (std::int64_t k = 0; k <= 2 * p; ++k) coefficients.push_back(binomial(2 * p, k));
  return PoincareSeries(std::move(coefficients));
}

PoincareSeries small_rank_poincare(const BettiProvider& provider, std::int64_t cover_genus, std::int64_t l,
                                   std::int64_t points, const std::string& chamber) {
  if (l < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  if (l == 1) return PoincareSeries{1};
  const BettiKey key{cover_genus, l, points, chamber};
  if (const auto* series = provider.find(key)) return *series;
  throw Error(ErrorKind::TableMissing, "no Betti table for " + describe(key));
}

BettiKey untwisted_key(const ModuliSpec& spec) {
  return {spec.genus(), spec.rank(), spec.num_points(), spec.chamber()};
}

BigInt SectorReport::euler_characteristic() const {
  BigInt chi = 0;
  for (const auto& entry : per_orbit) chi += entry.series.euler_characteristic();
  return chi;
}

TorsionElement canonical_element_of_order(const ModuliSpec& spec, std::int64_t m) {
  if (m < 1 || spec.rank() % m != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(m) + " does not divide the rank");
  }
  std::vector<std::int64_t> exponents(static_cast<std::size_t>(2 * spec.genus()), 0);
  exponents[0] = spec.rank() / m;
  return TorsionElement(spec.rank(), std::move(exponents));
}

SectorReport twisted_sector(const ModuliSpec& spec, const TorsionElement& eta, const BettiProvider& provider) {
  check_element_fits(spec, eta);
  if (eta.is_identity()) {
    throw Error(ErrorKind::IdentityElement, "the untwisted sector is handled separately");
  }
  require_shift_hypotheses(spec);
  const std::int64_t m = element_order(eta);
  const std::int64_t l = spec.rank() / m;
  const auto cover = spectral_cover_data(spec.genus(), m);
  const PoincareSeries component_series =
      prym_poincare(spec.genus(), m) *
      small_rank_poincare(provider, cover.cover_genus, l, spec.num_points() * m, spec.chamber());

  SectorReport report{eta, {}, {}};
  for (auto& representative : compute_orbit_section(spec, m).representatives) {
    auto table = eigenvalue_multiplicities(spec, representative);
    auto shift = degree_shift_value(table);
    report.sector_graded.add_series(component_series, 2 * shift);
    report.per_orbit.push_back({std::move(representative), std::move(table), std::move(shift), component_series});
  }
  return report;
}

ChenRuanTable chen_ruan_table(const ModuliSpec& spec, const BettiProvider& provider,
                              const std::optional<PoincareSeries>& untwisted) {
  require_shift_hypotheses(spec);
  ChenRuanTable table;
  table.untwisted = untwisted;
  for (const auto m : divisors(spec.rank())) {
    if (m == 1) continue;
    SectorContribution contribution{m, count_elements_of_order(spec.rank(), spec.genus(), m),
                                    twisted_sector(spec, canonical_element_of_order(spec, m), provider)};
    table.twisted.add_table(contribution.sector.sector_graded, contribution.element_count);
    table.sectors.push_back(std::move(contribution));
  }
  table.total = table.twisted;
  if (untwisted) table.total.add_series(*untwisted, Rational(0));
  return table;
}

std::vector<EulerCertificateEntry> euler_certificate(const ModuliSpec& spec, const BettiProvider& provider) {
  if (spec.higgs()) {
    throw Error(ErrorKind::ModeMismatch, "the Euler characteristic is computed without Higgs field");
  }
  std::vector<EulerCertificateEntry> certificate;
  for (const auto m : divisors(spec.rank())) {
    if (m == 1) continue;
    EulerCertificateEntry entry;
    entry.order = m;
    entry.element_count = count_elements_of_order(spec.rank(), spec.genus(), m);
    entry.orbit_classes = count_partitions(spec.rank(), m, spec.num_points()) / m;
    const auto prym = prym_poincare(spec.genus(), m);
    entry.prym_euler = prym.euler_characteristic();
    const std::int64_t l = spec.rank() / m;
    const auto cover = spectral_cover_data(spec.genus(), m);
    const BettiKey small_key{cover.cover_genus, l, spec.num_points() * m, spec.chamber()};
    if (l == 1 || provider.find(small_key) != nullptr) {
      const auto small = small_rank_poincare(provider, cover.cover_genus, l, spec.num_points() * m,
                                             spec.chamber());
      entry.sector_euler = entry.orbit_classes * (prym * small).euler_characteristic();
    }
    entry.vanishes = entry.prym_euler == 0 && (!entry.sector_euler || *entry.sector_euler == 0);
    certificate.push_back(std::move(entry));
  }
  return certificate;
}

OrbifoldEuler orbifold_euler(const ModuliSpec& spec, const BettiProvider& provider) {
  auto certificate = euler_certificate(spec, provider);
  const auto* untwisted = provider.find(untwisted_key(spec));
  if (untwisted == nullptr) {
    throw Error(ErrorKind::TableMissing, "no Betti table for " + describe(untwisted_key(spec)));
  }
  return {untwisted->euler_characteristic(), std::move(certificate)};
}

PairingSupport pairing_support(const Rational& n, const TorsionElement& eta, const TorsionElement& tau,
                               const ModuliSpec& spec) {
  check_element_fits(spec, eta);
  check_element_fits(spec, tau);
  if (n < 0 || n > 2 * moduli_dimension(spec)) return PairingSupport::ForcedZero;
  return tau == eta.inverse() ? PairingSupport::Candidate : PairingSupport::ForcedZero;
}

ProductSupport product_support(const TorsionElement& eta1, const TorsionElement& eta2) {
  return intersection_support(eta1, eta2) == IntersectionSupport::ForcedEmpty ? ProductSupport::ForcedZero
                                                                              : ProductSupport::Unknown;
}

}  // namespace chenruan
