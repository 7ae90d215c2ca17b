#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bmw {

using BigInt = boost::multiprecision::cpp_int;

// n! for n up to kMaxExactFactorialArgument; throws GroupTooLarge above it.
inline constexpr std::uint64_t kMaxExactFactorialArgument = 200000;

BigInt factorial(std::uint64_t n);
BigInt power(const BigInt& base, std::uint64_t exponent);

std::string to_string(const BigInt& value);
BigInt parse_bigint(std::string_view text);  // decimal, nonnegative

// Positive divisors of n in increasing order (trial division, n must fit 64 bits).
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs, increasing primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Returns (p, k) with q = p^k, or nothing when q is not a prime power.
bool is_prime_power(std::uint64_t q, std::uint64_t* prime = nullptr, unsigned* exponent = nullptr);

}  // namespace bmw
