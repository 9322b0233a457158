#include <doctest.h>

#include <random>

#include "chenruan/error.hpp"
#include "chenruan/fixed_loci.hpp"
#include "chenruan/oracle.hpp"
#include "chenruan/partitions.hpp"
#include "test_support.hpp"

using namespace chenruan;
using chenruan::testing::element;
using chenruan::testing::formula_spec;

TEST_CASE("fixed_locus_components rank 2") {
  for (std::int64_t g = 2; g <= 4; ++g) {
    const auto report = fixed_locus_components(formula_spec(g, 2, 1, 1), element(2, std::vector<std::int64_t>(2 * g, 1)));
    CHECK(report.eta_order == 2);
    CHECK(report.total_components == 2);
    CHECK(report.gamma_classes == BigInt(1));
  }
}

TEST_CASE("fixed_locus_components rank 6") {
  const auto spec = formula_spec(2, 6, 1, 1);
  // 90 and 720 were frozen from the brute-force partition enumerator.
  auto report = fixed_locus_components(spec, element(6, {2, 0, 0, 0}));
  CHECK(report.total_components == 90);
  CHECK(report.partition_count == 90);
  CHECK(report.components_per_partition == 3);
  CHECK(report.gamma_classes == BigInt(30));
  CHECK(report.free_transitive_subgroup_order == 3);
  report = fixed_locus_components(spec, element(6, {1, 0, 0, 0}));
  CHECK(report.total_components == 720);
  CHECK(report.gamma_classes == BigInt(120));
  CHECK(BigInt(compute_orbit_section(spec, 6).representatives.size()) == *report.gamma_classes);
}

TEST_CASE("fixed_locus_components errors and non-squarefree rank") {
  const auto spec = formula_spec(2, 6, 1, 1);
  CHECK_THROWS_AS(fixed_locus_components(spec, element(6, {0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(fixed_locus_components(spec, element(5, {1, 0, 0, 0})), Error);
  const auto four = formula_spec(3, 4, 1, 1);
  const auto report = fixed_locus_components(four, element(4, {1, 0, 0, 0, 0, 0}));
  CHECK(report.total_components == 24);
  CHECK_FALSE(report.gamma_classes.has_value());
  CHECK_FALSE(report.free_transitive_subgroup_order.has_value());
}

TEST_CASE("total components depend only on the generated subgroup") {
  const auto spec = formula_spec(2, 6, 1, 2);
  const auto eta = element(6, {1, 2, 0, 3});
  for (std::int64_t k : {1, 5, 7, 11}) {
    CHECK(fixed_locus_components(spec, eta.power(k)).total_components ==
          fixed_locus_components(spec, eta).total_components);
  }
}

TEST_CASE("intersection_support") {
  CHECK(intersection_support(element(6, {1, 0, 0, 0}), element(6, {1, 0, 0, 0})) ==
        IntersectionSupport::PossiblyNonempty);
  CHECK(intersection_support(element(5, {1, 0, 0, 0}), element(5, {0, 1, 0, 0})) == IntersectionSupport::ForcedEmpty);
  CHECK(intersection_support(element(6, {3, 0, 0, 0}), element(6, {0, 2, 0, 0})) ==
        IntersectionSupport::PossiblyNonempty);
  CHECK_THROWS_AS(intersection_support(element(6, {1, 0, 0, 0}), element(5, {1, 0, 0, 0})), Error);
}

TEST_CASE("property: intersection_support symmetric, prime case matches subgroup test") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t r = std::vector<std::int64_t>{2, 3, 5, 6, 7, 10}[trial % 6];
    const auto eta = chenruan::testing::random_element(r, 2, rng);
    const auto tau = chenruan::testing::random_element(r, 2, rng);
    if (eta.is_identity() || tau.is_identity()) continue;
    const auto forward = intersection_support(eta, tau);
    CHECK(forward == intersection_support(tau, eta));
    if (r == 2 || r == 3 || r == 5 || r == 7) {
      CHECK((forward == IntersectionSupport::PossiblyNonempty) == oracle::same_cyclic_subgroup(eta, tau));
    }
    if (element_order(eta) == element_order(tau)) {
      CHECK((forward == IntersectionSupport::ForcedEmpty) == !oracle::same_cyclic_subgroup(eta, tau));
    } else {
      CHECK(forward == IntersectionSupport::PossiblyNonempty);
    }
  }
}
