#pragma once

// Flag-adapted eigenbases over an exact field. Everything here is templated
// on the scalar; the field only needs exact ==, the four operations and a
// total order (used for deterministic choices). The library instantiates it
// with chenruan::Rational.

#include <algorithm>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

#include "chenruan/error.hpp"

// Eigen 3.4 gives non-vector expressions `const_iterator = void`, which the
// Boost 1.74 byte-container probe cannot digest.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace chenruan {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct RowEchelon {
  DenseMatrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  ///< pivot column of each non-zero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{input, {}};
  auto& a = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(row));
    const Scalar lead = a(row, col);
    a.row(row) /= lead;
    for (Eigen::Index other = 0; other < a.rows(); ++other) {
      if (other == row || a(other, col) == Scalar(0)) continue;
      const Scalar factor = a(other, col);
      a.row(other) -= factor * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivots.size());
}

/// Solves a x = b for invertible square a.
template <typename Scalar>
DenseMatrix<Scalar> exact_solve(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> augmented(a.rows(), a.cols() + b.cols());
  augmented << a, b;
  const auto echelon = row_echelon(augmented);
  if (static_cast<Eigen::Index>(echelon.pivots.size()) != a.cols() ||
      (a.cols() > 0 && echelon.pivots.back() >= a.cols())) {
    throw Error(ErrorKind::InvalidArgument, "matrix is singular");
  }
  return echelon.reduced.rightCols(b.cols());
}

/// A linear operator together with a full flag V_1 < ... < V_r that it
/// preserves. The flag is held as an adapted basis: V_j is spanned by the
/// first j columns of flag_basis().
template <typename Scalar>
class FlaggedOperator {
 public:
  FlaggedOperator(DenseMatrix<Scalar> matrix, DenseMatrix<Scalar> flag_basis)
      : matrix_(std::move(matrix)), flag_basis_(std::move(flag_basis)) {
    const auto r = matrix_.rows();
    if (matrix_.cols() != r || flag_basis_.rows() != r || flag_basis_.cols() != r) {
      throw Error(ErrorKind::InvalidArgument, "operator and flag must be square of the same size");
    }
    if (exact_rank(flag_basis_) != r) {
      throw Error(ErrorKind::FlagNotFull, "flag basis does not span the space");
    }
    for (Eigen::Index j = 0; j < r; ++j) {
      DenseMatrix<Scalar> test(r, j + 2);
      test << flag_basis_.leftCols(j + 1), matrix_ * flag_basis_.col(j);
      if (exact_rank(test) != j + 1) {
        throw Error(ErrorKind::FlagNotPreserved,
                    "operator does not preserve V_" + std::to_string(j + 1));
      }
    }
  }

  /// Builds the adapted basis from nested subspaces, subspaces[j] holding
  /// spanning vectors (columns) of V_{j+1}.
  static FlaggedOperator from_subspaces(DenseMatrix<Scalar> matrix,
                                        const std::vector<DenseMatrix<Scalar>>& subspaces) {
    const auto r = matrix.rows();
    if (static_cast<Eigen::Index>(subspaces.size()) != r) {
      throw Error(ErrorKind::FlagNotFull, "a full flag needs one subspace per dimension");
    }
    DenseMatrix<Scalar> basis(r, 0);
    for (Eigen::Index j = 0; j < r; ++j) {
      const auto& span = subspaces[static_cast<std::size_t>(j)];
      if (span.rows() != r || exact_rank(span) != j + 1) {
        throw Error(ErrorKind::FlagNotFull, "V_" + std::to_string(j + 1) + " has the wrong dimension");
      }
      DenseMatrix<Scalar> joined(r, basis.cols() + span.cols());
      joined << basis, span;
      if (exact_rank(joined) != j + 1) {
        throw Error(ErrorKind::FlagNotFull, "subspaces are not nested");
      }
      for (Eigen::Index c = 0; c < span.cols(); ++c) {
        DenseMatrix<Scalar> extended(r, basis.cols() + 1);
        extended << basis, span.col(c);
        if (exact_rank(extended) == j + 1) {
          basis = std::move(extended);
          break;
        }
      }
    }
    return FlaggedOperator(std::move(matrix), std::move(basis));
  }

  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  const DenseMatrix<Scalar>& matrix() const noexcept { return matrix_; }
  const DenseMatrix<Scalar>& flag_basis() const noexcept { return flag_basis_; }

  /// The operator in flag coordinates; upper triangular.
  DenseMatrix<Scalar> triangular_form() const {
    return exact_solve<Scalar>(flag_basis_, matrix_ * flag_basis_);
  }

 private:
  DenseMatrix<Scalar> matrix_;
  DenseMatrix<Scalar> flag_basis_;
};

template <typename Scalar>
struct FlagEigenbasis {
  DenseMatrix<Scalar> vectors;      ///< column j is v_{j+1}
  DenseVector<Scalar> eigenvalues;  ///< eigenvalue of each column
};

/// True when the minimal polynomial of a is a product of distinct linear
/// factors over the field, given that its roots are exactly `roots`.
template <typename Scalar>
bool annihilated_by_distinct_roots(const DenseMatrix<Scalar>& a, std::vector<Scalar> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  const auto r = a.rows();
  DenseMatrix<Scalar> product = DenseMatrix<Scalar>::Identity(r, r);
  for (const auto& root : roots) {
    DenseMatrix<Scalar> factor = a - root * DenseMatrix<Scalar>::Identity(r, r);
    product = (product * factor).eval();
  }
  return product == DenseMatrix<Scalar>::Zero(r, r);
}

/// Eigenvectors v_1..v_r with span(v_1..v_j) = V_j for every j.
///
/// Built one step at a time: in flag coordinates the operator is upper
/// triangular, V_{j+1}/V_j carries the eigenvalue on the diagonal, and the
/// eigenvector taken is the null vector of (B_{j+1} - lambda) whose free
/// coordinate j+1 is 1 and whose other free coordinates vanish.
template <typename Scalar>
FlagEigenbasis<Scalar> flag_compatible_eigenbasis(const FlaggedOperator<Scalar>& op) {
  const auto r = op.dimension();
  const DenseMatrix<Scalar> triangular = op.triangular_form();
  std::vector<Scalar> diagonal;
  for (Eigen::Index j = 0; j < r; ++j) diagonal.push_back(triangular(j, j));
  if (!annihilated_by_distinct_roots<Scalar>(triangular, diagonal)) {
    throw Error(ErrorKind::NotDiagonalizable, "minimal polynomial has a repeated root");
  }

  FlagEigenbasis<Scalar> out{DenseMatrix<Scalar>(r, r), DenseVector<Scalar>(r)};
  for (Eigen::Index j = 0; j < r; ++j) {
    const Scalar lambda = triangular(j, j);
    const DenseMatrix<Scalar> shifted =
        triangular.topLeftCorner(j + 1, j + 1) - lambda * DenseMatrix<Scalar>::Identity(j + 1, j + 1);
    const auto echelon = row_echelon(shifted);
    if (std::find(echelon.pivots.begin(), echelon.pivots.end(), j) != echelon.pivots.end()) {
      throw Error(ErrorKind::NotDiagonalizable, "no eigenvector completes V_" + std::to_string(j));
    }
    DenseVector<Scalar> coords = DenseVector<Scalar>::Zero(j + 1);
    coords(j) = Scalar(1);
    for (std::size_t row = 0; row < echelon.pivots.size(); ++row) {
      coords(echelon.pivots[row]) = -echelon.reduced(static_cast<Eigen::Index>(row), j);
    }
    out.vectors.col(j) = op.flag_basis().leftCols(j + 1) * coords;
    out.eigenvalues(j) = lambda;
  }
  return out;
}

}  // namespace chenruan
