#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chenruan/degree_shift.hpp"
#include "chenruan/graded.hpp"
#include "chenruan/moduli_spec.hpp"
#include "chenruan/partitions.hpp"
#include "chenruan/rational.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan {

struct BettiKey {
  std::int64_t genus = 0;
  std::int64_t rank = 0;
  std::int64_t points = 0;
  std::string chamber;

  auto operator<=>(const BettiKey&) const = default;
};

std::string describe(const BettiKey& key);

/// Read-only store of externally supplied Betti tables of parabolic moduli.
/// Lookups are exact: no interpolation across genus, rank or chamber.
class BettiProvider {
 public:
  /// A key may be supplied twice only with an identical series.
  void add(const BettiKey& key, PoincareSeries series);
  void merge(const BettiProvider& other);
  const PoincareSeries* find(const BettiKey& key) const;
  const std::map<BettiKey, PoincareSeries>& tables() const noexcept { return tables_; }

 private:
  std::map<BettiKey, PoincareSeries> tables_;
};

/// Betti numbers of a complex torus of dimension (m-1)(g-1).
PoincareSeries prym_poincare(std::int64_t g, std::int64_t m);

/// Rank one is a point; higher rank comes from the provider.
PoincareSeries small_rank_poincare(const BettiProvider& provider, std::int64_t cover_genus, std::int64_t l,
                                   std::int64_t points, const std::string& chamber);

/// Key of the untwisted moduli itself.
BettiKey untwisted_key(const ModuliSpec& spec);

struct OrbitClassCohomology {
  WeightPartition representative;
  EigenvalueMultiplicityTable multiplicities;
  Rational shift;
  PoincareSeries series;  ///< unshifted cohomology of the component class
};

struct SectorReport {
  TorsionElement eta;
  std::vector<OrbitClassCohomology> per_orbit;
  RationalGradedDimension sector_graded;

  BigInt euler_characteristic() const;  ///< alternating sum before shifting
};

SectorReport twisted_sector(const ModuliSpec& spec, const TorsionElement& eta, const BettiProvider& provider);

/// Canonical element (r/m, 0, ..., 0) of order m; the sector depends on the
/// element only through m.
TorsionElement canonical_element_of_order(const ModuliSpec& spec, std::int64_t m);

struct SectorContribution {
  std::int64_t order = 1;
  BigInt element_count = 0;
  SectorReport sector;
};

struct ChenRuanTable {
  std::optional<PoincareSeries> untwisted;
  std::vector<SectorContribution> sectors;  ///< one per divisor m > 1 of r
  RationalGradedDimension twisted;          ///< sum over sectors, weighted by element counts
  RationalGradedDimension total;            ///< twisted plus the untwisted series, when known
};

ChenRuanTable chen_ruan_table(const ModuliSpec& spec, const BettiProvider& provider,
                              const std::optional<PoincareSeries>& untwisted);

struct EulerCertificateEntry {
  std::int64_t order = 1;
  BigInt element_count = 0;
  BigInt orbit_classes = 0;
  BigInt prym_euler = 0;
  std::optional<BigInt> sector_euler;  ///< needs the small-rank table when r/m > 1
  bool vanishes = false;
};

std::vector<EulerCertificateEntry> euler_certificate(const ModuliSpec& spec, const BettiProvider& provider);

struct OrbifoldEuler {
  BigInt value;
  std::vector<EulerCertificateEntry> certificate;
};

/// Throws TableMissing when the untwisted Betti table is not supplied.
OrbifoldEuler orbifold_euler(const ModuliSpec& spec, const BettiProvider& provider);

enum class PairingSupport { ForcedZero, Candidate };
enum class ProductSupport { ForcedZero, Unknown };

/// n is the Chen-Ruan degree of the left factor; outside [0, 2 dim] the
/// pairing space is zero.
PairingSupport pairing_support(const Rational& n, const TorsionElement& eta, const TorsionElement& tau,
                               const ModuliSpec& spec);

ProductSupport product_support(const TorsionElement& eta1, const TorsionElement& eta2);

}  // namespace chenruan
