#include <doctest.h>

#include "chenruan/error.hpp"
#include "chenruan/moduli_spec.hpp"
#include "test_support.hpp"

using namespace chenruan;
using chenruan::testing::raw_spec;

namespace {

ErrorKind kind_of(const RawModuliSpec& raw) {
  try {
    validate_moduli_spec(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected validation to fail");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_moduli_spec accepts the minimal instance") {
  auto raw = raw_spec(2, 3, 1, 1);
  raw.weights = {{Rational(0), Rational(1, 3), Rational(2, 3)}};
  const auto spec = validate_moduli_spec(raw);
  CHECK(spec.capabilities().coprime_rank_degree);
  CHECK(spec.capabilities().squarefree_rank);
  CHECK(spec.rank() == 3);
}

TEST_CASE("validate_moduli_spec rejects genus 2 with rank 2") {
  CHECK(kind_of(raw_spec(2, 2, 1, 1)) == ErrorKind::GenusTooSmall);
  CHECK(kind_of(raw_spec(1, 3, 1, 1)) == ErrorKind::GenusTooSmall);
  // Relaxed policy keeps the genus >= 2 floor.
  CHECK_NOTHROW(validate_moduli_spec(raw_spec(2, 2, 1, 1), ValidationPolicy{false}));
  CHECK_THROWS_AS(validate_moduli_spec(raw_spec(1, 2, 1, 1), ValidationPolicy{false}), Error);
}

TEST_CASE("validate_moduli_spec rank 6 with two points") {
  const auto spec = validate_moduli_spec(raw_spec(3, 6, 5, 2));
  CHECK(spec.capabilities().squarefree_rank);
  CHECK(spec.capabilities().coprime_rank_degree);
  const auto non_coprime = validate_moduli_spec(raw_spec(3, 6, 4, 2));
  CHECK_FALSE(non_coprime.capabilities().coprime_rank_degree);
  CHECK_FALSE(validate_moduli_spec(raw_spec(3, 4, 1, 1)).capabilities().squarefree_rank);
}

TEST_CASE("weight validation errors") {
  auto raw = raw_spec(3, 3, 1, 1);
  raw.weights[0][2] = Rational(1);
  CHECK(kind_of(raw) == ErrorKind::WeightOutOfRange);
  raw.weights[0][2] = Rational(-1, 5);
  CHECK(kind_of(raw) == ErrorKind::WeightOutOfRange);

  raw = raw_spec(3, 3, 1, 1);
  std::swap(raw.weights[0][0], raw.weights[0][1]);
  CHECK(kind_of(raw) == ErrorKind::WeightsNotStrictlyIncreasing);
  raw.weights[0][0] = raw.weights[0][1];
  CHECK(kind_of(raw) == ErrorKind::WeightsNotStrictlyIncreasing);

  raw = raw_spec(3, 3, 1, 1);
  raw.weights[0].pop_back();
  CHECK(kind_of(raw) == ErrorKind::WeightCountMismatch);

  raw = raw_spec(3, 3, 1, 2);
  raw.weights.pop_back();
  CHECK(kind_of(raw) == ErrorKind::WeightCountMismatch);
}

TEST_CASE("weights may repeat across different points") {
  auto raw = raw_spec(3, 3, 1, 2);
  CHECK(raw.weights[0] == raw.weights[1]);
  CHECK_NOTHROW(validate_moduli_spec(raw));
}

TEST_CASE("validation is idempotent") {
  const auto spec = validate_moduli_spec(raw_spec(3, 6, 5, 2));
  CHECK(validate_moduli_spec(spec.raw()) == spec);
}

TEST_CASE("moduli_dimension") {
  using chenruan::testing::formula_spec;
  CHECK(moduli_dimension(formula_spec(2, 2, 1, 1)) == 4);
  CHECK(moduli_dimension(formula_spec(2, 6, 1, 1)) == 50);
  CHECK(moduli_dimension(formula_spec(3, 2, 1, 2)) == 8);
}

TEST_CASE("shift hypotheses") {
  using chenruan::testing::formula_spec;
  CHECK_NOTHROW(require_shift_hypotheses(formula_spec(2, 6, 1, 1)));
  try {
    require_shift_hypotheses(formula_spec(2, 6, 2, 1));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapabilityMissing);
  }
  auto raw = raw_spec(3, 3, 1, 1);
  raw.higgs = true;
  try {
    require_shift_hypotheses(validate_moduli_spec(raw));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeMismatch);
  }
}
