#pragma once

// Exact integer scalar type and small helpers shared by the whole library.
// All arithmetic in the library is exact; nothing here ever rounds.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>

namespace apery {

using Int = mpz_class;

// Residue of a modulo m, normalized into [0, |m|).  m must be nonzero.
Int mod_nonneg(const Int& a, const Int& m);

// True iff a ≡ b (mod m).  m = 0 means equality.
bool congruent(const Int& a, const Int& b, const Int& m);

// base^exp for exp >= 0 (0^0 = 1).
Int pow_int(const Int& base, unsigned long exp);

// gcd of all values, always >= 0; empty input or all zeros gives 0.
Int gcd_all(std::span<const Int> values);

// Convenience for literals in tests and tables.
inline Int to_int(long v) { return Int(v); }

}  // namespace apery
