#include "chenruan/graded.hpp"

#include "chenruan/error.hpp"

namespace chenruan {

PoincareSeries::PoincareSeries(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "Betti numbers must be non-negative");
  }
  trim();
}

PoincareSeries::PoincareSeries(std::initializer_list<std::int64_t> coefficients)
    : PoincareSeries(std::vector<BigInt>(coefficients.begin(), coefficients.end())) {}

void PoincareSeries::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt PoincareSeries::coefficient(std::int64_t degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return coefficients_[static_cast<std::size_t>(degree)];
}

BigInt PoincareSeries::euler_characteristic() const {
  BigInt chi = 0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k % 2 == 0) {
      chi += coefficients_[k];
    } else {
      chi -= coefficients_[k];
    }
  }
  return chi;
}

BigInt PoincareSeries::total_dimension() const {
  BigInt total = 0;
  for (const auto& c : coefficients_) total += c;
  return total;
}

bool PoincareSeries::is_palindromic() const {
  for (std::size_t i = 0, j = coefficients_.size(); i < j--; ++i) {
    if (coefficients_[i] != coefficients_[j]) return false;
  }
  return true;
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return PoincareSeries(std::move(out));
}

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) {
  std::vector<BigInt> out(std::max(a.coefficients_.size(), b.coefficients_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return PoincareSeries(std::move(out));
}

void RationalGradedDimension::add(const Rational& grade, const BigInt& dim) {
  if (grade < 0) throw Error(ErrorKind::InvalidArgument, "grades must be non-negative");
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "dimensions must be non-negative");
  if (dim == 0) return;
  entries_[grade] += dim;
}

void RationalGradedDimension::add_series(const PoincareSeries& series, const Rational& shift,
                                         const BigInt& multiplicity) {
  for (std::int64_t k = 0; k <= series.top_degree(); ++k) {
    add(Rational(k) + shift, series.coefficient(k) * multiplicity);
  }
}

void RationalGradedDimension::add_table(const RationalGradedDimension& other, const BigInt& multiplicity) {
  for (const auto& [grade, dim] : other.entries_) add(grade, dim * multiplicity);
}

BigInt RationalGradedDimension::at(const Rational& grade) const {
  const auto it = entries_.find(grade);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt RationalGradedDimension::total_dimension() const {
  BigInt total = 0;
  for (const auto& [grade, dim] : entries_) total += dim;
  return total;
}

}  // namespace chenruan
