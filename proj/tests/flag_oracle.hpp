#pragma once

// Independent verification of a flag-adapted eigenbasis: plain std::vector
// arithmetic, no Eigen and no shared elimination code.

#include <vector>

#include "chenruan/flag_eigenbasis.hpp"
#include "chenruan/rational.hpp"

namespace chenruan::testing {

using RowMajor = std::vector<std::vector<Rational>>;

template <typename M>
RowMajor to_rows(const M& m) {
  RowMajor out(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return out;
}

/// Fraction-free determinant by cofactor-free Bareiss elimination.
inline Rational determinant(RowMajor a) {
  const std::size_t n = a.size();
  Rational sign = 1;
  Rational previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  return n == 0 ? Rational(1) : sign * a[n - 1][n - 1];
}

/// Is w an eigenvector of a (non-zero, a w parallel to w)?
inline bool is_eigenvector(const RowMajor& a, const std::vector<Rational>& w) {
  const std::size_t n = w.size();
  std::size_t lead = 0;
  while (lead < n && w[lead] == 0) ++lead;
  if (lead == n) return false;
  std::vector<Rational> image(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) image[i] += a[i][j] * w[j];
  }
  const Rational lambda = image[lead] / w[lead];
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] != lambda * w[i]) return false;
  }
  return true;
}

/// span(v_1..v_j) = span(f_1..f_j) for all j: with the f's completed by
/// v_j, the j vectors f_1..f_{j-1}, v_j must be independent while
/// f_1..f_j, v_j must be dependent, checked through Gram determinants.
inline bool spans_match(const RowMajor& flag_cols, const RowMajor& vec_cols) {
  const std::size_t n = flag_cols.size();
  auto gram = [&](const std::vector<const std::vector<Rational>*>& cols) {
    RowMajor g(cols.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t k = 0; k < n; ++k) g[i][j] += (*cols[i])[k] * (*cols[j])[k];
      }
    }
    return determinant(g);
  };
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<const std::vector<Rational>*> prefix;
    for (std::size_t k = 0; k < j; ++k) prefix.push_back(&flag_cols[k]);
    prefix.push_back(&vec_cols[j]);
    if (gram(prefix) == 0) return false;  // v_j outside V_{j-1} ...
    prefix.back() = &flag_cols[j];
    prefix.push_back(&vec_cols[j]);
    if (gram(prefix) != 0) return false;  // ... and inside V_j
  }
  return true;
}

template <typename M>
RowMajor columns(const M& m) {
  return to_rows(m.transpose().eval());
}

inline bool verify_flag_eigenbasis(const FlaggedOperator<Rational>& op, const FlagEigenbasis<Rational>& basis) {
  const auto a = to_rows(op.matrix());
  const auto vecs = columns(basis.vectors);
  for (const auto& v : vecs) {
    if (!is_eigenvector(a, v)) return false;
  }
  return spans_match(columns(op.flag_basis()), vecs);
}

}  // namespace chenruan::testing
