#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chenruan {

// Expression templates are disabled so both types behave as plain values and
// compose with Eigen's scalar machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optionally signed). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Always "numerator/denominator", denominator positive, in lowest terms.
std::string to_fraction_string(const Rational& value);

BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt ipow(const BigInt& base, std::int64_t exponent);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
bool is_squarefree(std::int64_t n);
int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace chenruan
