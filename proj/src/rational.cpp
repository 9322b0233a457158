#include "chenruan/rational.hpp"

#include <cctype>
#include <numeric>

#include "chenruan/error.hpp"

namespace chenruan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightsNotStrictlyIncreasing: return "WeightsNotStrictlyIncreasing";
    case ErrorKind::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IdentityElement: return "IdentityElement";
    case ErrorKind::CapabilityMissing: return "CapabilityMissing";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::TableMissing: return "TableMissing";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::FlagNotPreserved: return "FlagNotPreserved";
    case ErrorKind::FlagNotFull: return "FlagNotFull";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GuardrailExceeded: return "GuardrailExceeded";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(whole) + "\"");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorKind::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

BigInt numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }

BigInt denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

std::string to_fraction_string(const Rational& value) {
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt ipow(const BigInt& base, std::int64_t exponent) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

int moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace chenruan
