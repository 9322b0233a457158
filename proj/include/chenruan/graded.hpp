#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "chenruan/rational.hpp"

namespace chenruan {

/// Integer-graded dimension vector sum_k b_k t^k. Coefficients are stored
/// densely from degree 0 with trailing zeros trimmed.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(std::vector<BigInt> coefficients);
  PoincareSeries(std::initializer_list<std::int64_t> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(std::int64_t degree) const;
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Top degree with a non-zero coefficient; -1 for the zero series.
  std::int64_t top_degree() const noexcept { return static_cast<std::int64_t>(coefficients_.size()) - 1; }

  /// Value at t = -1.
  BigInt euler_characteristic() const;
  BigInt total_dimension() const;
  bool is_palindromic() const;

  /// Graded tensor product.
  friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
  friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b);
  bool operator==(const PoincareSeries&) const = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// Finitely supported map from non-negative rational grades to dimensions.
class RationalGradedDimension {
 public:
  void add(const Rational& grade, const BigInt& dim);
  /// Adds multiplicity * series, with degree k placed at grade k + shift.
  void add_series(const PoincareSeries& series, const Rational& shift, const BigInt& multiplicity = 1);
  void add_table(const RationalGradedDimension& other, const BigInt& multiplicity = 1);

  BigInt at(const Rational& grade) const;
  const std::map<Rational, BigInt>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  BigInt total_dimension() const;

  bool operator==(const RationalGradedDimension&) const = default;

 private:
  std::map<Rational, BigInt> entries_;
};

}  // namespace chenruan
