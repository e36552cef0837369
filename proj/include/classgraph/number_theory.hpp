#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace classgraph {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// Trial division; ascending primes. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// True for p^e with e >= 1.
bool is_prime_power(std::uint64_t n);

// Inverse of a modulo m (gcd(a, m) == 1, m >= 1). Returns 0 when m == 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace classgraph
