#pragma once

#include <cstdint>
#include <optional>

#include "chenruan/moduli_spec.hpp"
#include "chenruan/rational.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan {

/// Connected-component census of the fixed locus of one torsion element.
/// The Gamma-quotient fields are only filled when the rank is squarefree.
struct ComponentReport {
  std::int64_t eta_order = 1;
  BigInt partition_count = 0;
  std::int64_t components_per_partition = 1;
  BigInt total_components = 0;
  std::optional<BigInt> gamma_classes;
  std::optional<std::int64_t> free_transitive_subgroup_order;
};

enum class IntersectionSupport { ForcedEmpty, PossiblyNonempty };

/// Mode-agnostic: the Higgs flag does not enter the count.
ComponentReport fixed_locus_components(const ModuliSpec& spec, const TorsionElement& eta);

/// Same census keyed only by the order m of the element.
ComponentReport fixed_locus_components_for_order(const ModuliSpec& spec, std::int64_t m);

IntersectionSupport intersection_support(const TorsionElement& eta, const TorsionElement& tau);

}  // namespace chenruan
