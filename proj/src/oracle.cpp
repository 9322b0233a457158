#include "chenruan/oracle.hpp"

#include <algorithm>
#include <set>

#include "chenruan/error.hpp"

namespace chenruan::oracle {

std::int64_t order_by_repeated_addition(const TorsionElement& eta) {
  const auto r = eta.modulus();
  std::vector<std::int64_t> acc = eta.exponents();
  for (std::int64_t k = 1;; ++k) {
    if (std::all_of(acc.begin(), acc.end(), [](std::int64_t e) { return e == 0; })) return k;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + eta.exponents()[i]) % r;
  }
}

std::map<std::int64_t, BigInt> order_census(std::int64_t r, std::int64_t g) {
  std::map<std::int64_t, BigInt> census;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(2 * g), 0);
  while (true) {
    ++census[order_by_repeated_addition(TorsionElement(r, digits))];
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == r) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return census;
}

namespace {

std::set<std::vector<std::int64_t>> multiples(const TorsionElement& eta) {
  std::set<std::vector<std::int64_t>> out;
  for (std::int64_t k = 0; k < eta.modulus(); ++k) {
    std::vector<std::int64_t> v(eta.exponents().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (k * eta.exponents()[i]) % eta.modulus();
    out.insert(std::move(v));
  }
  return out;
}

void choose_blocks(std::vector<int>& remaining, std::int64_t l, std::vector<std::vector<int>>& chosen,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (remaining.empty()) {
    emit(chosen);
    return;
  }
  const auto n = remaining.size();
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + l, true);
  // Every l-subset of the remaining weights, via a selection mask.
  do {
    std::vector<int> block;
    std::vector<int> rest;
    for (std::size_t k = 0; k < n; ++k) (mask[k] ? block : rest).push_back(remaining[k]);
    chosen.push_back(block);
    choose_blocks(rest, l, chosen, emit);
    chosen.pop_back();
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

void per_point(std::int64_t r, std::int64_t l, std::int64_t s, Blocks& prefix,
               const std::function<void(const Blocks&)>& visit) {
  if (static_cast<std::int64_t>(prefix.size()) == s) {
    visit(prefix);
    return;
  }
  std::vector<int> all(static_cast<std::size_t>(r));
  for (std::int64_t k = 0; k < r; ++k) all[static_cast<std::size_t>(k)] = static_cast<int>(k);
  std::vector<std::vector<int>> chosen;
  choose_blocks(all, l, chosen, [&](const std::vector<std::vector<int>>& blocks) {
    prefix.push_back(blocks);
    per_point(r, l, s, prefix, visit);
    prefix.pop_back();
  });
}

}  // namespace

bool same_cyclic_subgroup(const TorsionElement& eta, const TorsionElement& tau) {
  return multiples(eta) == multiples(tau);
}

bool contains(const TorsionElement& eta, const TorsionElement& tau) {
  return multiples(eta).count(tau.exponents()) > 0;
}

void for_each_partition(std::int64_t r, std::int64_t m, std::int64_t s,
                        const std::function<void(const Blocks&)>& visit) {
  if (m < 1 || r % m != 0) throw Error(ErrorKind::NotADivisor, "order must divide the rank");
  Blocks prefix;
  per_point(r, r / m, s, prefix, visit);
}

Blocks rotate(const Blocks& blocks, std::int64_t i) {
  Blocks out = blocks;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    const auto m = static_cast<std::int64_t>(blocks[p].size());
    for (std::int64_t j = 0; j < m; ++j) {
      out[p][static_cast<std::size_t>(j)] = blocks[p][static_cast<std::size_t>((((j + i) % m) + m) % m)];
    }
  }
  return out;
}

std::int64_t dominance(const ModuliSpec& spec, const Blocks& blocks, std::int64_t i) {
  std::int64_t count = 0;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    const auto& weights = spec.weights_at(p);
    const auto m = static_cast<std::int64_t>(blocks[p].size());
    for (std::int64_t j = 0; j < m; ++j) {
      const auto& here = blocks[p][static_cast<std::size_t>(j)];
      const auto& there = blocks[p][static_cast<std::size_t>((j + i) % m)];
      for (int a : here) {
        for (int b : there) {
          if (weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)]) ++count;
        }
      }
    }
  }
  return count;
}

std::vector<Blocks> rotation_orbit(const Blocks& blocks) {
  std::set<Blocks> orbit;
  const auto m = static_cast<std::int64_t>(blocks.front().size());
  for (std::int64_t i = 0; i < m; ++i) orbit.insert(rotate(blocks, i));
  return {orbit.begin(), orbit.end()};
}

}  // namespace chenruan::oracle
