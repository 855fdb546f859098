#pragma once

// Factorization of the small positive integers that show up as congruence
// moduli, plus the radical / squarefree-part maps derived from it.

#include "apery/integer.hpp"

#include <vector>

namespace apery {

struct Factorization {
  struct PrimePower {
    Int prime;
    unsigned exponent;
  };
  std::vector<PrimePower> prime_powers;  // primes strictly increasing

  // Product of the prime powers; reconstructs the factorized value.
  Int value() const;
};

// Deterministic primality check (trial division; inputs here are tiny).
bool is_prime(const Int& n);

// Factorize n >= 1 by trial division.  n = 1 yields an empty list.
// Every emitted prime is re-checked with is_prime.  Rejects n <= 0.
Factorization factorize(const Int& n);

// rad(n): product of the distinct primes dividing n; rad(1) = 1.
Int radical(const Int& n);

// Product of the primes appearing in n with exponent exactly 1.  This is the
// unique squarefree divisor s with gcd(s, n / s) = 1 and s | rad(n).
Int squarefree_part(const Int& n);

}  // namespace apery
