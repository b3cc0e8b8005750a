#pragma once

#include <vector>

#include "eulerbrick/arith.hpp"

namespace eulerbrick {

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = prod prime^exponent, primes strictly increasing.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  /// Number of distinct primes (omega).
  std::size_t distinct() const { return factors.size(); }
  std::size_t distinct_odd() const;
  u64 product() const;
};

/// Deterministic trial division up to sqrt(value). value must be >= 1.
Factorization factorize(u64 value);

/// All divisors in increasing order.
std::vector<u64> divisors(const Factorization& f);

/// Divisors d with gcd(d, value/d) == 1, increasing.
std::vector<u64> unitary_divisors(const Factorization& f);

}  // namespace eulerbrick
