#include "chenruan/degree_shift.hpp"

#include <numeric>

#include "chenruan/error.hpp"

namespace chenruan {

namespace {

void check_partition_fits(const ModuliSpec& spec, const WeightPartition& t) {
  if (t.rank() != spec.rank() || t.num_points() != spec.num_points()) {
    throw Error(ErrorKind::InvalidArgument, "partition does not match the spec");
  }
  if (t.order() == 1) {
    throw Error(ErrorKind::IdentityElement, "the identity element has no twisted sector");
  }
}

void check_element_fits(const ModuliSpec& spec, const TorsionElement& eta) {
  if (eta.modulus() != spec.rank() ||
      static_cast<std::int64_t>(eta.exponents().size()) != 2 * spec.genus()) {
    throw Error(ErrorKind::ModulusMismatch, "torsion element does not belong to this moduli problem");
  }
  if (eta.is_identity()) {
    throw Error(ErrorKind::IdentityElement, "the identity element has no twisted sector");
  }
}

}  // namespace

std::int64_t EigenvalueMultiplicityTable::multiplicity(std::int64_t k) const {
  if (k < 1 || k >= order) {
    throw Error(ErrorKind::IndexOutOfRange, "eigenvalue index must lie in 1..m-1");
  }
  return multiplicities[static_cast<std::size_t>(k - 1)];
}

std::int64_t EigenvalueMultiplicityTable::codimension() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

std::int64_t dominance_count(const WeightPartition& t, std::int64_t i) {
  const std::int64_t m = t.order();
  if (i < 1 || i >= m) {
    throw Error(ErrorKind::IndexOutOfRange, "rotation index must lie in 1..m-1");
  }
  std::int64_t count = 0;
  for (std::int64_t p = 0; p < t.num_points(); ++p) {
    const auto& labels = t.labels(static_cast<std::size_t>(p));
    // Weight index order is weight order, so a > b means weight_a > weight_b.
    for (std::size_t a = 0; a < labels.size(); ++a) {
      const int target = static_cast<int>((labels[a] + i) % m);
      for (std::size_t b = 0; b < a; ++b) {
        if (labels[b] == target) ++count;
      }
    }
  }
  return count;
}

EigenvalueMultiplicityTable eigenvalue_multiplicities(const ModuliSpec& spec, const WeightPartition& t) {
  require_shift_hypotheses(spec);
  check_partition_fits(spec, t);
  const std::int64_t r = spec.rank();
  const std::int64_t m = t.order();
  const std::int64_t base = r * r * (spec.genus() - 1) / m;
  EigenvalueMultiplicityTable table;
  table.order = m;
  table.multiplicities.reserve(static_cast<std::size_t>(m - 1));
  for (std::int64_t k = 1; k < m; ++k) table.multiplicities.push_back(base + dominance_count(t, k));
  table.trivial_multiplicity = moduli_dimension(spec) - table.codimension();
  return table;
}

EigenvalueMultiplicityTable eigenvalue_multiplicities(const ModuliSpec& spec, const TorsionElement& eta,
                                                      const WeightPartition& t) {
  check_element_fits(spec, eta);
  if (element_order(eta) != t.order()) {
    throw Error(ErrorKind::InvalidArgument, "partition order does not match the element's order");
  }
  return eigenvalue_multiplicities(spec, t);
}

Rational degree_shift_value(const EigenvalueMultiplicityTable& table) {
  BigInt weighted = 0;
  for (std::int64_t k = 1; k < table.order; ++k) weighted += BigInt(k) * table.multiplicity(k);
  return Rational(weighted, BigInt(table.order));
}

Rational conjugate_degree_shift_value(const EigenvalueMultiplicityTable& table) {
  BigInt weighted = 0;
  for (std::int64_t k = 1; k < table.order; ++k) {
    weighted += BigInt(table.order - k) * table.multiplicity(k);
  }
  return Rational(weighted, BigInt(table.order));
}

DegreeShift degree_shift(const ModuliSpec& spec, const TorsionElement& eta, const WeightPartition& t) {
  const auto table = eigenvalue_multiplicities(spec, eta, t);
  return {degree_shift_value(table), eta, orbit_representative(t)};
}

std::int64_t fixed_component_dimension_for_order(const ModuliSpec& spec, std::int64_t m) {
  require_shift_hypotheses(spec);
  if (m <= 1 || spec.rank() % m != 0) {
    throw Error(ErrorKind::InvalidArgument, "order must be a non-trivial divisor of the rank");
  }
  const std::int64_t l = spec.rank() / m;
  const auto cover = spectral_cover_data(spec.genus(), m);
  return cover.prym_dim + (l * l - 1) * (cover.cover_genus - 1) +
         spec.num_points() * m * l * (l - 1) / 2;
}

std::int64_t fixed_component_dimension(const ModuliSpec& spec, const TorsionElement& eta) {
  check_element_fits(spec, eta);
  return fixed_component_dimension_for_order(spec, element_order(eta));
}

std::int64_t total_codimension(const ModuliSpec& spec, const TorsionElement& eta, const WeightPartition& t) {
  return eigenvalue_multiplicities(spec, eta, t).codimension();
}

}  // namespace chenruan
