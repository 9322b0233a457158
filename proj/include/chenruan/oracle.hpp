#pragma once

// Brute-force cross-checks. Nothing in here calls the closed-form code paths
// it is meant to validate: partitions are built by recursive subset choice,
// orders by repeated addition, dominance by comparing the rational weights.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "chenruan/moduli_spec.hpp"
#include "chenruan/rational.hpp"
#include "chenruan/torsion.hpp"

namespace chenruan::oracle {

/// blocks[p][j] = sorted weight indices in block j at point p.
using Blocks = std::vector<std::vector<std::vector<int>>>;

/// Order of every element of (Z/r)^{2g}, tallied. Cost r^{2g}.
std::map<std::int64_t, BigInt> order_census(std::int64_t r, std::int64_t g);

std::int64_t order_by_repeated_addition(const TorsionElement& eta);

/// <eta> and <tau> compared as explicit sets.
bool same_cyclic_subgroup(const TorsionElement& eta, const TorsionElement& tau);
bool contains(const TorsionElement& eta, const TorsionElement& tau);  ///< tau in <eta>

/// Visits every ordered equal-block partition, built by choosing block 1,
/// then block 2 from what is left, and so on.
void for_each_partition(std::int64_t r, std::int64_t m, std::int64_t s,
                        const std::function<void(const Blocks&)>& visit);

/// Moves block j+i into slot j.
Blocks rotate(const Blocks& blocks, std::int64_t i);

/// Pair count computed from the rational weights themselves.
std::int64_t dominance(const ModuliSpec& spec, const Blocks& blocks, std::int64_t i);

/// Orbit of a partition under all rotations, as a set.
std::vector<Blocks> rotation_orbit(const Blocks& blocks);

}  // namespace chenruan::oracle
