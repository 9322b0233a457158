#include <doctest.h>

#include <random>

#include "chenruan/error.hpp"
#include "chenruan/flag_eigenbasis.hpp"
#include "flag_oracle.hpp"

using namespace chenruan;
using Mat = DenseMatrix<Rational>;
using Vec = DenseVector<Rational>;

namespace {

Mat mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Mat out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto x : row) out(i, j++) = Rational(x);
    ++i;
  }
  return out;
}

ErrorKind failure_kind(const Mat& a, const Mat& flag) {
  try {
    flag_compatible_eigenbasis(FlaggedOperator<Rational>(a, flag));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("identity returns the flag's adapted basis") {
  const Mat flag = mat({{1, 2, 0}, {0, 1, 3}, {1, 0, 1}});
  const FlaggedOperator<Rational> op(Mat::Identity(3, 3), flag);
  const auto basis = flag_compatible_eigenbasis(op);
  CHECK(basis.vectors == flag);
  CHECK(basis.eigenvalues == Vec::Constant(3, Rational(1)));
}

TEST_CASE("upper triangular 2x2") {
  const FlaggedOperator<Rational> op(mat({{1, 1}, {0, 2}}), Mat::Identity(2, 2));
  const auto basis = flag_compatible_eigenbasis(op);
  CHECK(basis.vectors == mat({{1, 1}, {0, 1}}));
  CHECK(basis.eigenvalues(0) == 1);
  CHECK(basis.eigenvalues(1) == 2);
  CHECK(testing::verify_flag_eigenbasis(op, basis));
}

TEST_CASE("diagonal operator with a reversed flag") {
  const auto op = FlaggedOperator<Rational>::from_subspaces(mat({{2, 0}, {0, 3}}), {mat({{0}, {1}}), Mat::Identity(2, 2)});
  const auto basis = flag_compatible_eigenbasis(op);
  CHECK(basis.vectors == mat({{0, 1}, {1, 0}}));
  CHECK(basis.eigenvalues(0) == 3);
  CHECK(basis.eigenvalues(1) == 2);
}

TEST_CASE("error paths") {
  CHECK(failure_kind(mat({{1, 1}, {0, 1}}), Mat::Identity(2, 2)) == ErrorKind::NotDiagonalizable);
  CHECK(failure_kind(mat({{1, 0}, {1, 2}}), Mat::Identity(2, 2)) == ErrorKind::FlagNotPreserved);
  CHECK(failure_kind(mat({{1, 0}, {0, 2}}), mat({{1, 2}, {1, 2}})) == ErrorKind::FlagNotFull);
  // Rotation by 90 degrees has no rational invariant line.
  CHECK(failure_kind(mat({{0, -1}, {1, 0}}), Mat::Identity(2, 2)) == ErrorKind::FlagNotPreserved);
  CHECK_THROWS_AS(FlaggedOperator<Rational>::from_subspaces(Mat::Identity(2, 2), {mat({{1}, {0}}), mat({{1}, {0}})}),
                  Error);
  CHECK_THROWS_AS(FlaggedOperator<Rational>::from_subspaces(Mat::Identity(2, 2), {mat({{1}, {0}})}), Error);
}

TEST_CASE("from_subspaces with redundant spanning sets") {
  const Mat v1 = mat({{2}, {0}, {0}});
  const Mat v2 = mat({{1, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  const Mat v3 = mat({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  const Mat a = mat({{5, 1, -1}, {0, 3, 2}, {0, 0, 5}});
  const auto op = FlaggedOperator<Rational>::from_subspaces(a, {v1, v2, v3});
  const auto basis = flag_compatible_eigenbasis(op);
  CHECK(testing::verify_flag_eigenbasis(op, basis));
}

TEST_CASE("property: conjugated diagonal operators, dimensions up to 8") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> small(-5, 5);
  std::uniform_int_distribution<int> dim_dist(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = dim_dist(rng);
    Mat diag = Mat::Zero(n, n);
    std::vector<Rational> eigenvalues;
    for (int i = 0; i < n; ++i) {
      // Repeated eigenvalues are allowed; the operator stays diagonalizable.
      const Rational lambda(small(rng), std::uniform_int_distribution<std::int64_t>(1, 3)(rng));
      diag(i, i) = lambda;
      eigenvalues.push_back(lambda);
    }
    Mat unipotent = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) unipotent(i, j) = Rational(small(rng));
    }
    const Mat inverse = exact_solve<Rational>(unipotent, Mat::Identity(n, n));
    const FlaggedOperator<Rational> op(unipotent * diag * inverse, Mat::Identity(n, n));
    const auto basis = flag_compatible_eigenbasis(op);
    CHECK(testing::verify_flag_eigenbasis(op, basis));
    std::vector<Rational> found(basis.eigenvalues.data(), basis.eigenvalues.data() + n);
    std::sort(found.begin(), found.end());
    std::sort(eigenvalues.begin(), eigenvalues.end());
    CHECK(found == eigenvalues);
  }
}
