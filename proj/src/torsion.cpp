#include "chenruan/torsion.hpp"

#include <algorithm>

#include "chenruan/error.hpp"

namespace chenruan {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t r) {
  const std::int64_t x = a % r;
  return x < 0 ? x + r : x;
}

void require_same_modulus(const TorsionElement& a, const TorsionElement& b) {
  if (a.modulus() != b.modulus() || a.exponents().size() != b.exponents().size()) {
    throw Error(ErrorKind::ModulusMismatch, "torsion elements live in different groups");
  }
}

}  // namespace

TorsionElement::TorsionElement(std::int64_t modulus, std::vector<std::int64_t> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw Error(ErrorKind::InvalidArgument, "torsion modulus must be positive");
  for (auto& e : exponents_) e = mod(e, modulus_);
}

TorsionElement TorsionElement::identity(std::int64_t modulus, std::int64_t genus) {
  return TorsionElement(modulus, std::vector<std::int64_t>(static_cast<std::size_t>(2 * genus), 0));
}

bool TorsionElement::is_identity() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t e) { return e == 0; });
}

TorsionElement TorsionElement::power(std::int64_t k) const {
  std::vector<std::int64_t> out(exponents_.size());
  const std::int64_t kr = mod(k, modulus_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (kr * exponents_[i]) % modulus_;
  return TorsionElement(modulus_, std::move(out));
}

std::int64_t element_order(const TorsionElement& eta) {
  std::int64_t g = eta.modulus();
  for (auto e : eta.exponents()) g = gcd64(g, e);
  return eta.modulus() / g;
}

BigInt count_elements_of_order(std::int64_t r, std::int64_t g, std::int64_t m) {
  if (m < 1 || r % m != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(r));
  }
  BigInt total = 0;
  for (auto e : divisors(m)) {
    const int mu = moebius(m / e);
    if (mu != 0) total += mu * ipow(BigInt(e), 2 * g);
  }
  return total;
}

SpectralCoverData spectral_cover_data(std::int64_t g, std::int64_t m) {
  return {m, m * (g - 1) + 1, (m - 1) * (g - 1)};
}

DetTwist pushforward_det_twist(std::int64_t m, std::int64_t r) {
  if (m < 1 || r % m != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(r));
  }
  if (m % 2 == 1) return {DetTwist::Tag::Trivial, 0};
  return {DetTwist::Tag::EtaPower, r / 2};
}

bool in_cyclic_subgroup(const TorsionElement& tau, const TorsionElement& eta) {
  require_same_modulus(tau, eta);
  const std::int64_t m = element_order(eta);
  for (std::int64_t k = 0; k < m; ++k) {
    if (eta.power(k) == tau) return true;
  }
  return false;
}

bool cyclic_subgroup_equal(const TorsionElement& eta, const TorsionElement& tau) {
  require_same_modulus(eta, tau);
  return element_order(eta) == element_order(tau) && in_cyclic_subgroup(tau, eta);
}

}  // namespace chenruan
