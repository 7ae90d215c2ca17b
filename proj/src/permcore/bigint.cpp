#include "bmw/bigint.hpp"

#include <cctype>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

// Product of lo..hi (inclusive) by binary splitting; keeps operands balanced.
BigInt range_product(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    BigInt acc = 1;
    for (std::uint64_t k = lo; k <= hi; ++k) acc *= k;
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

}  // namespace

BigInt factorial(std::uint64_t n) {
  if (n > kMaxExactFactorialArgument) {
    throw GroupTooLarge("factorial argument " + std::to_string(n) + " exceeds the exact-arithmetic limit " +
                        std::to_string(kMaxExactFactorialArgument));
  }
  return range_product(2, n);
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* prime, unsigned* exponent) {
  if (q < 2) return false;
  const auto f = factorize(q);
  if (f.size() != 1) return false;
  if (prime != nullptr) *prime = f.front().first;
  if (exponent != nullptr) *exponent = f.front().second;
  return true;
}

}  // namespace bmw
