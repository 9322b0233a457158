#include <doctest.h>

#include <random>
#include <set>

#include "chenruan/error.hpp"
#include "chenruan/oracle.hpp"
#include "chenruan/partitions.hpp"
#include "test_support.hpp"

using namespace chenruan;

namespace {

BigInt oracle_count(std::int64_t r, std::int64_t m, std::int64_t s) {
  BigInt n = 0;
  oracle::for_each_partition(r, m, s, [&](const oracle::Blocks&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("count_partitions against brute-force enumeration") {
  CHECK(count_partitions(2, 2, 1) == 2);
  CHECK(oracle_count(6, 3, 1) == 90);
  CHECK(count_partitions(6, 3, 1) == 90);
  CHECK(oracle_count(6, 6, 1) == 720);
  CHECK(count_partitions(6, 6, 2) == 518400);
  CHECK(oracle_count(4, 2, 1) == 6);
  CHECK_THROWS_AS(count_partitions(6, 4, 1), Error);
}

TEST_CASE("enumerate_partitions small cases") {
  using chenruan::testing::formula_spec;
  const auto spec = formula_spec(2, 2, 1, 1);
  std::vector<std::vector<std::vector<Rational>>> seen;
  PartitionStream stream(spec, 2);
  while (auto t = stream.next()) seen.push_back(induced_weights(spec, *t, 0));
  const Rational a = spec.weights_at(0)[0];
  const Rational b = spec.weights_at(0)[1];
  REQUIRE(seen.size() == 2);
  CHECK(std::count(seen.begin(), seen.end(), std::vector<std::vector<Rational>>{{a}, {b}}) == 1);
  CHECK(std::count(seen.begin(), seen.end(), std::vector<std::vector<Rational>>{{b}, {a}}) == 1);

  BigInt n = 0;
  for_each_partition(4, 2, 1, [&](const WeightPartition&) { return ++n, true; });
  CHECK(n == 6);

  PartitionStream single(spec, 1);
  const auto only = single.next();
  REQUIRE(only.has_value());
  CHECK(only->blocks(0) == std::vector<std::vector<int>>{{0, 1}});
  CHECK_FALSE(single.next().has_value());
  CHECK_THROWS_AS(PartitionStream(6, 4, 1), Error);
}

TEST_CASE("enumeration has no duplicates and matches the closed form") {
  for (std::int64_t r : {2, 3, 4, 5, 6}) {
    for (auto m : divisors(r)) {
      for (std::int64_t s : {1, 2}) {
        if (count_partitions(r, m, s) > 600000) continue;
        std::set<std::vector<std::vector<int>>> keys;
        BigInt n = 0;
        for_each_partition(r, m, s, [&](const WeightPartition& t) {
          std::vector<std::vector<int>> key;
          for (std::int64_t p = 0; p < s; ++p) key.push_back(t.labels(static_cast<std::size_t>(p)));
          keys.insert(std::move(key));
          ++n;
          return true;
        });
        CHECK(n == count_partitions(r, m, s));
        CHECK(BigInt(keys.size()) == n);
        if (n <= 50000) CHECK(oracle_count(r, m, s) == n);
      }
    }
  }
}

TEST_CASE("induced_weights") {
  auto raw = chenruan::testing::raw_spec(2, 6, 1, 1);
  raw.weights = {{Rational(1, 12), Rational(2, 12), Rational(3, 12), Rational(4, 12), Rational(5, 12),
                  Rational(6, 12)}};
  const auto spec = validate_moduli_spec(raw);
  const auto t = WeightPartition::from_blocks(6, {{{0, 1}, {2, 3}, {4, 5}}});
  CHECK(induced_weights(spec, t, 0) == std::vector<std::vector<Rational>>{{Rational(1, 12), Rational(2, 12)},
                                                                         {Rational(3, 12), Rational(4, 12)},
                                                                         {Rational(5, 12), Rational(6, 12)}});
  const auto u = WeightPartition::from_blocks(6, {{{5, 0}, {2, 3}, {4, 1}}});
  CHECK(induced_weights(spec, u, 0)[0] == std::vector<Rational>{Rational(1, 12), Rational(6, 12)});
  CHECK_THROWS_AS(induced_weights(spec, t, 1), Error);

  const auto spec2 = chenruan::testing::formula_spec(2, 2, 1, 1);
  const auto swapped = WeightPartition::from_blocks(2, {{{1}, {0}}});
  CHECK(induced_weights(spec2, swapped, 0) ==
        std::vector<std::vector<Rational>>{{spec2.weights_at(0)[1]}, {spec2.weights_at(0)[0]}});
}

TEST_CASE("from_blocks rejects non-partitions") {
  CHECK_THROWS_AS(WeightPartition::from_blocks(4, {{{0, 1}, {1, 2}}}), Error);
  CHECK_THROWS_AS(WeightPartition::from_blocks(4, {{{0, 1, 2}, {3}}}), Error);
}

TEST_CASE("galois_rotate") {
  const auto t = WeightPartition::from_blocks(2, {{{0}, {1}}});
  CHECK(galois_rotate(t, 0) == t);
  CHECK(galois_rotate(t, 2) == t);
  CHECK(galois_rotate(t, 1) == WeightPartition::from_blocks(2, {{{1}, {0}}}));
  const auto u = WeightPartition::from_blocks(6, {{{0, 4}, {2, 3}, {1, 5}}, {{5, 4}, {0, 1}, {2, 3}}});
  CHECK(galois_rotate(u, 1).blocks(0) == std::vector<std::vector<int>>{{2, 3}, {1, 5}, {0, 4}});
  for (std::int64_t i = -4; i < 8; ++i) CHECK(galois_rotate(galois_rotate(u, i), 3 - i) == u);
}

TEST_CASE("orbit sections") {
  CHECK(compute_orbit_section(2, 2, 1).representatives.size() == 1);
  CHECK(compute_orbit_section(6, 3, 1).representatives.size() == 30);
  CHECK(compute_orbit_section(6, 2, 1).representatives.size() == 10);

  const auto section = compute_orbit_section(6, 3, 2);
  CHECK(BigInt(section.representatives.size()) * 3 == count_partitions(6, 3, 2));
  CHECK(std::is_sorted(section.representatives.begin(), section.representatives.end()));
  std::vector<std::size_t> hits(section.representatives.size(), 0);
  for_each_partition(6, 3, 2, [&](const WeightPartition& t) {
    const auto loc = section.locate(t);
    CHECK(galois_rotate(section.representatives[loc.representative], loc.rotation) == t);
    ++hits[loc.representative];
    CHECK(!(t < section.representatives[loc.representative]));
    return true;
  });
  CHECK(std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 3; }));
}

TEST_CASE("property: action is free and rotation preserves the partition property") {
  for (std::int64_t r : {2, 3, 4, 5, 6}) {
    for (auto m : divisors(r)) {
      if (m == 1) continue;
      for (std::int64_t s : {1, 2}) {
        if (count_partitions(r, m, s) > 600000) continue;
        bool free = true;
        bool orbits_exact = true;
        oracle::for_each_partition(r, m, s, [&](const oracle::Blocks& blocks) {
          const auto t = WeightPartition::from_blocks(r, blocks);
          for (std::int64_t i = 1; i < m; ++i) free = free && !(galois_rotate(t, i) == t);
          if (count_partitions(r, m, s) <= 20000) {
            orbits_exact = orbits_exact && static_cast<std::int64_t>(oracle::rotation_orbit(blocks).size()) == m;
          }
        });
        CHECK_MESSAGE(free, "r=" << r << " m=" << m << " s=" << s);
        CHECK(orbits_exact);
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = chenruan::testing::random_partition(12, 4, 3, rng);
    const auto u = galois_rotate(t, trial);
    for (std::int64_t p = 0; p < 3; ++p) {
      std::vector<int> all;
      for (const auto& block : u.blocks(static_cast<std::size_t>(p))) all.insert(all.end(), block.begin(), block.end());
      std::sort(all.begin(), all.end());
      CHECK(all == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    }
  }
}
