#pragma once

#include <cstdint>
#include <vector>

#include "chenruan/moduli_spec.hpp"
#include "chenruan/partitions.hpp"
#include "chenruan/rational.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan {

/// Multiplicities of the non-trivial eigenvalues exp(2 pi i k/m), k = 1..m-1,
/// of the torsion action on the tangent space along one fixed component.
struct EigenvalueMultiplicityTable {
  std::int64_t order = 1;
  std::vector<std::int64_t> multiplicities;  ///< entry k-1 belongs to exp(2 pi i k/m)
  std::int64_t trivial_multiplicity = 0;     ///< derived: dimension minus codimension

  std::int64_t multiplicity(std::int64_t k) const;
  std::int64_t codimension() const;
};

struct DegreeShift {
  Rational value;
  TorsionElement eta;
  WeightPartition representative;  ///< orbit class of the component
};

/// Number of pairs (a, b) with a weight of block j strictly above a weight of
/// block j+i (indices mod m), summed over blocks and parabolic points.
std::int64_t dominance_count(const WeightPartition& t, std::int64_t i);

EigenvalueMultiplicityTable eigenvalue_multiplicities(const ModuliSpec& spec, const TorsionElement& eta,
                                                      const WeightPartition& t);

/// Order-keyed variant used by the sector pipeline; m is read off t.
EigenvalueMultiplicityTable eigenvalue_multiplicities(const ModuliSpec& spec, const WeightPartition& t);

DegreeShift degree_shift(const ModuliSpec& spec, const TorsionElement& eta, const WeightPartition& t);

/// sum_k (k/m) mult_k.
Rational degree_shift_value(const EigenvalueMultiplicityTable& table);

/// sum_k ((m-k)/m) mult_k, the shift with every eigenvalue conjugated.
Rational conjugate_degree_shift_value(const EigenvalueMultiplicityTable& table);

std::int64_t fixed_component_dimension(const ModuliSpec& spec, const TorsionElement& eta);
std::int64_t fixed_component_dimension_for_order(const ModuliSpec& spec, std::int64_t m);

std::int64_t total_codimension(const ModuliSpec& spec, const TorsionElement& eta, const WeightPartition& t);

}  // namespace chenruan
