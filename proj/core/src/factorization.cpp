#include "apery/factorization.hpp"

#include <cassert>

namespace apery {

Int Factorization::value() const {
  Int prod = 1;
  for (const auto& pp : prime_powers) prod *= pow_int(pp.prime, pp.exponent);
  return prod;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(const Int& n) {
  if (n <= 0) throw std::domain_error("factorize: argument must be positive");
  Factorization f;
  Int rest = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      assert(is_prime(p));
      f.prime_powers.push_back({p, e});
    }
  };
  strip(2);
  for (Int d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) {
    Int p = rest;  // copy: strip mutates rest
    strip(p);
  }
  return f;
}

Int radical(const Int& n) {
  Int r = 1;
  for (const auto& pp : factorize(n).prime_powers) r *= pp.prime;
  return r;
}

Int squarefree_part(const Int& n) {
  Int s = 1;
  for (const auto& pp : factorize(n).prime_powers)
    if (pp.exponent == 1) s *= pp.prime;
  return s;
}

}  // namespace apery
