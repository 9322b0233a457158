#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chenruan/moduli_spec.hpp"
#include "chenruan/rational.hpp"

namespace chenruan {

/// An element of the set of ordered equal-block partitions: at each
/// parabolic point the r weights are split into m ordered blocks of size
/// l = r/m. Weights are referred to by their index in the point's
/// (strictly increasing) weight list, so index order is weight order.
class WeightPartition {
 public:
  /// labels[p][k] is the block holding weight k at point p.
  WeightPartition(std::int64_t order, std::vector<std::vector<int>> labels);

  /// blocks[p][j] lists the weight indices in block j at point p.
  static WeightPartition from_blocks(std::int64_t rank,
                                     const std::vector<std::vector<std::vector<int>>>& blocks);

  std::int64_t order() const noexcept { return order_; }
  std::int64_t rank() const noexcept { return static_cast<std::int64_t>(labels_.front().size()); }
  std::int64_t block_size() const noexcept { return rank() / order_; }
  std::int64_t num_points() const noexcept { return static_cast<std::int64_t>(labels_.size()); }
  const std::vector<int>& labels(std::size_t point) const { return labels_.at(point); }

  /// Blocks at one point in Galois order, each sorted increasingly.
  std::vector<std::vector<int>> blocks(std::size_t point) const;

  bool operator==(const WeightPartition&) const = default;

  /// Lexicographic on (point, block index, sorted block contents).
  friend bool operator<(const WeightPartition& a, const WeightPartition& b);

 private:
  std::int64_t order_;
  std::vector<std::vector<int>> labels_;
};

/// (r!/(l!)^m)^s, the size of the partition set.
BigInt count_partitions(std::int64_t r, std::int64_t m, std::int64_t s);

/// Streams every partition exactly once without materializing the set.
class PartitionStream {
 public:
  PartitionStream(std::int64_t r, std::int64_t m, std::int64_t s);
  PartitionStream(const ModuliSpec& spec, std::int64_t m)
      : PartitionStream(spec.rank(), m, spec.num_points()) {}

  std::optional<WeightPartition> next();

 private:
  std::int64_t order_;
  std::vector<std::vector<int>> labels_;
  bool exhausted_ = false;
  bool started_ = false;
};

/// Calls visit(t) for each partition; stops early if visit returns false.
void for_each_partition(std::int64_t r, std::int64_t m, std::int64_t s,
                        const std::function<bool(const WeightPartition&)>& visit);

/// Full-flag weight chains at the m preimages of one parabolic point.
std::vector<std::vector<Rational>> induced_weights(const ModuliSpec& spec, const WeightPartition& t,
                                                   std::size_t point_index);

/// Output block j holds input block j + i (mod m) at every point.
WeightPartition galois_rotate(const WeightPartition& t, std::int64_t i);

/// Least element of the rotation orbit of t.
WeightPartition orbit_representative(const WeightPartition& t);

struct OrbitLocation {
  std::size_t representative = 0;  ///< index into OrbitSection::representatives
  std::int64_t rotation = 0;       ///< galois_rotate(rep, rotation) == query
};

struct OrbitSection {
  std::int64_t order = 1;
  std::vector<WeightPartition> representatives;  ///< sorted, one per orbit

  OrbitLocation locate(const WeightPartition& t) const;
};

OrbitSection compute_orbit_section(const ModuliSpec& spec, std::int64_t m);
OrbitSection compute_orbit_section(std::int64_t r, std::int64_t m, std::int64_t s);

}  // namespace chenruan
