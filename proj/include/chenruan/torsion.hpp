#pragma once

#include <cstdint>
#include <vector>

#include "chenruan/rational.hpp"

namespace chenruan {

/// Element of (Z/r)^{2g}, written as an exponent vector against a fixed
/// basis of the r-torsion of the Jacobian.
class TorsionElement {
 public:
  /// Residues are reduced into [0, modulus).
  TorsionElement(std::int64_t modulus, std::vector<std::int64_t> exponents);

  static TorsionElement identity(std::int64_t modulus, std::int64_t genus);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  bool is_identity() const noexcept;

  /// k-fold product, i.e. k * exponents mod r.
  TorsionElement power(std::int64_t k) const;
  TorsionElement inverse() const { return power(-1); }

  bool operator==(const TorsionElement&) const = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> exponents_;
};

struct SpectralCoverData {
  std::int64_t order = 1;
  std::int64_t cover_genus = 0;
  std::int64_t prym_dim = 0;
};

/// Twist appearing in the determinant of a pushforward from the spectral
/// cover: trivial for odd m, the (r/2)-th power of eta for even m.
struct DetTwist {
  enum class Tag { Trivial, EtaPower };
  Tag tag = Tag::Trivial;
  std::int64_t exponent = 0;

  bool operator==(const DetTwist&) const = default;
};

std::int64_t element_order(const TorsionElement& eta);

/// Number of elements of exact order m in (Z/r)^{2g}, by Moebius inversion
/// over the divisors of m.
BigInt count_elements_of_order(std::int64_t r, std::int64_t g, std::int64_t m);

SpectralCoverData spectral_cover_data(std::int64_t g, std::int64_t m);

DetTwist pushforward_det_twist(std::int64_t m, std::int64_t r);

bool cyclic_subgroup_equal(const TorsionElement& eta, const TorsionElement& tau);

/// tau in <eta>.
bool in_cyclic_subgroup(const TorsionElement& tau, const TorsionElement& eta);

}  // namespace chenruan
