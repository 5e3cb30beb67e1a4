#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cartan {

/// Arbitrary-precision signed integer used for all group orders, matrix
/// entries and bounds.
using Integer = mpz_class;

Integer pow(const Integer& base, unsigned long exponent);
Integer pow(unsigned long base, unsigned long exponent);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned long m);

/// Largest e with p^e | m; m must be nonzero.
unsigned long valuation(const Integer& m, unsigned long p);

std::string to_string(const Integer& value);
/// Parses a decimal string; throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order. factorize(1) is empty; n must be positive.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace cartan
