#include "chenruan/fixed_loci.hpp"

#include "chenruan/error.hpp"
#include "chenruan/partitions.hpp"

namespace chenruan {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

ComponentReport fixed_locus_components_for_order(const ModuliSpec& spec, std::int64_t m) {
  if (m == 1) {
    throw Error(ErrorKind::IdentityElement,
                "the identity fixes the whole moduli space; use the untwisted sector");
  }
  ComponentReport report;
  report.eta_order = m;
  report.partition_count = count_partitions(spec.rank(), m, spec.num_points());
  report.components_per_partition = m;
  report.total_components = report.partition_count;
  if (spec.capabilities().squarefree_rank) {
    report.gamma_classes = report.partition_count / m;
    report.free_transitive_subgroup_order = m;
  }
  return report;
}

ComponentReport fixed_locus_components(const ModuliSpec& spec, const TorsionElement& eta) {
  if (eta.modulus() != spec.rank() ||
      static_cast<std::int64_t>(eta.exponents().size()) != 2 * spec.genus()) {
    throw Error(ErrorKind::ModulusMismatch, "torsion element does not belong to this moduli problem");
  }
  return fixed_locus_components_for_order(spec, element_order(eta));
}

IntersectionSupport intersection_support(const TorsionElement& eta, const TorsionElement& tau) {
  if (eta.modulus() != tau.modulus() || eta.exponents().size() != tau.exponents().size()) {
    throw Error(ErrorKind::ModulusMismatch, "torsion elements live in different groups");
  }
  if (eta.is_identity() || tau.is_identity()) {
    throw Error(ErrorKind::IdentityElement, "intersection support is defined for non-trivial elements");
  }
  if (element_order(eta) == element_order(tau) && !cyclic_subgroup_equal(eta, tau)) {
    return IntersectionSupport::ForcedEmpty;
  }
  if (is_prime(eta.modulus()) && !in_cyclic_subgroup(tau, eta)) {
    return IntersectionSupport::ForcedEmpty;
  }
  return IntersectionSupport::PossiblyNonempty;
}

}  // namespace chenruan
