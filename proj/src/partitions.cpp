#include "chenruan/partitions.hpp"

#include <algorithm>

#include "chenruan/error.hpp"

namespace chenruan {

namespace {

void require_divisor(std::int64_t r, std::int64_t m) {
  if (m < 1 || r < 1 || r % m != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(r));
  }
}

std::vector<int> initial_word(std::int64_t r, std::int64_t m) {
  std::vector<int> word(static_cast<std::size_t>(r));
  const std::int64_t l = r / m;
  for (std::int64_t k = 0; k < r; ++k) word[static_cast<std::size_t>(k)] = static_cast<int>(k / l);
  return word;
}

// Concatenation of the sorted blocks; all blocks have the same size, so
// comparing these sequences compares blocks lexicographically.
std::vector<int> block_major(const std::vector<int>& labels, std::int64_t m) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == j) out.push_back(static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace

WeightPartition::WeightPartition(std::int64_t order, std::vector<std::vector<int>> labels)
    : order_(order), labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::InvalidArgument, "partition needs at least one point");
  const std::int64_t r = static_cast<std::int64_t>(labels_.front().size());
  require_divisor(r, order_);
  const std::int64_t l = r / order_;
  for (const auto& word : labels_) {
    if (static_cast<std::int64_t>(word.size()) != r) {
      throw Error(ErrorKind::InvalidArgument, "partition points disagree on rank");
    }
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(order_), 0);
    for (int label : word) {
      if (label < 0 || label >= order_) {
        throw Error(ErrorKind::InvalidArgument, "block label out of range");
      }
      ++sizes[static_cast<std::size_t>(label)];
    }
    if (std::any_of(sizes.begin(), sizes.end(), [l](std::int64_t n) { return n != l; })) {
      throw Error(ErrorKind::InvalidArgument, "blocks must all have size r/m");
    }
  }
}

WeightPartition WeightPartition::from_blocks(
    std::int64_t rank, const std::vector<std::vector<std::vector<int>>>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidArgument, "partition needs at least one point");
  const auto m = static_cast<std::int64_t>(blocks.front().size());
  std::vector<std::vector<int>> labels;
  for (const auto& point : blocks) {
    if (static_cast<std::int64_t>(point.size()) != m) {
      throw Error(ErrorKind::InvalidArgument, "points disagree on the number of blocks");
    }
    std::vector<int> word(static_cast<std::size_t>(rank), -1);
    for (std::size_t j = 0; j < point.size(); ++j) {
      for (int k : point[j]) {
        if (k < 0 || k >= rank || word[static_cast<std::size_t>(k)] != -1) {
          throw Error(ErrorKind::InvalidArgument, "blocks are not a partition of the weights");
        }
        word[static_cast<std::size_t>(k)] = static_cast<int>(j);
      }
    }
    labels.push_back(std::move(word));
  }
  return WeightPartition(m, std::move(labels));
}

std::vector<std::vector<int>> WeightPartition::blocks(std::size_t point) const {
  const auto& word = labels_.at(point);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (std::size_t k = 0; k < word.size(); ++k) {
    out[static_cast<std::size_t>(word[k])].push_back(static_cast<int>(k));
  }
  return out;
}

bool operator<(const WeightPartition& a, const WeightPartition& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  if (a.labels_.size() != b.labels_.size()) return a.labels_.size() < b.labels_.size();
  for (std::size_t p = 0; p < a.labels_.size(); ++p) {
    if (a.labels_[p] == b.labels_[p]) continue;
    return block_major(a.labels_[p], a.order_) < block_major(b.labels_[p], b.order_);
  }
  return false;
}

BigInt count_partitions(std::int64_t r, std::int64_t m, std::int64_t s) {
  require_divisor(r, m);
  const std::int64_t l = r / m;
  BigInt per_point = 1;
  for (std::int64_t remaining = r; remaining > 0; remaining -= l) per_point *= binomial(remaining, l);
  return ipow(per_point, s);
}

PartitionStream::PartitionStream(std::int64_t r, std::int64_t m, std::int64_t s) : order_(m) {
  require_divisor(r, m);
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "at least one parabolic point is required");
  labels_.assign(static_cast<std::size_t>(s), initial_word(r, m));
}

std::optional<WeightPartition> PartitionStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return WeightPartition(order_, labels_);
  }
  // Odometer over points; each digit runs through the multiset permutations
  // of its label word.
  for (std::size_t p = labels_.size(); p-- > 0;) {
    if (std::next_permutation(labels_[p].begin(), labels_[p].end())) {
      return WeightPartition(order_, labels_);
    }
    // next_permutation already wrapped the word back to sorted order.
  }
  exhausted_ = true;
  return std::nullopt;
}

void for_each_partition(std::int64_t r, std::int64_t m, std::int64_t s,
                        const std::function<bool(const WeightPartition&)>& visit) {
  PartitionStream stream(r, m, s);
  while (auto t = stream.next()) {
    if (!visit(*t)) return;
  }
}

std::vector<std::vector<Rational>> induced_weights(const ModuliSpec& spec, const WeightPartition& t,
                                                   std::size_t point_index) {
  if (point_index >= static_cast<std::size_t>(t.num_points()) ||
      point_index >= spec.weights().size()) {
    throw Error(ErrorKind::IndexOutOfRange, "no parabolic point " + std::to_string(point_index));
  }
  if (t.rank() != spec.rank()) {
    throw Error(ErrorKind::InvalidArgument, "partition rank does not match the spec");
  }
  const auto& weights = spec.weights_at(point_index);
  std::vector<std::vector<Rational>> out;
  for (const auto& block : t.blocks(point_index)) {
    std::vector<Rational> chain;
    chain.reserve(block.size());
    for (int k : block) chain.push_back(weights[static_cast<std::size_t>(k)]);
    std::sort(chain.begin(), chain.end());
    out.push_back(std::move(chain));
  }
  return out;
}

WeightPartition galois_rotate(const WeightPartition& t, std::int64_t i) {
  const std::int64_t m = t.order();
  const std::int64_t shift = ((i % m) + m) % m;
  std::vector<std::vector<int>> labels;
  labels.reserve(static_cast<std::size_t>(t.num_points()));
  for (std::int64_t p = 0; p < t.num_points(); ++p) {
    std::vector<int> word = t.labels(static_cast<std::size_t>(p));
    for (auto& label : word) label = static_cast<int>((label - shift + m) % m);
    labels.push_back(std::move(word));
  }
  return WeightPartition(m, std::move(labels));
}

WeightPartition orbit_representative(const WeightPartition& t) {
  WeightPartition best = t;
  for (std::int64_t k = 1; k < t.order(); ++k) {
    auto candidate = galois_rotate(t, k);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

OrbitLocation OrbitSection::locate(const WeightPartition& t) const {
  if (t.order() != order) throw Error(ErrorKind::InvalidArgument, "partition has the wrong order");
  std::int64_t best_k = 0;
  WeightPartition best = t;
  for (std::int64_t k = 1; k < order; ++k) {
    auto candidate = galois_rotate(t, k);
    if (candidate < best) {
      best = std::move(candidate);
      best_k = k;
    }
  }
  const auto it = std::lower_bound(representatives.begin(), representatives.end(), best);
  if (it == representatives.end() || !(*it == best)) {
    throw Error(ErrorKind::InvalidArgument, "partition is not covered by this section");
  }
  return {static_cast<std::size_t>(it - representatives.begin()), (order - best_k) % order};
}

OrbitSection compute_orbit_section(std::int64_t r, std::int64_t m, std::int64_t s) {
  OrbitSection section;
  section.order = m;
  for_each_partition(r, m, s, [&](const WeightPartition& t) {
    bool least = true;
    for (std::int64_t k = 1; k < m && least; ++k) least = !(galois_rotate(t, k) < t);
    if (least) section.representatives.push_back(t);
    return true;
  });
  std::sort(section.representatives.begin(), section.representatives.end());
  return section;
}

OrbitSection compute_orbit_section(const ModuliSpec& spec, std::int64_t m) {
  return compute_orbit_section(spec.rank(), m, spec.num_points());
}

}  // namespace chenruan
