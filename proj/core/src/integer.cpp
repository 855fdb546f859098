#include "apery/integer.hpp"

namespace apery {

Int mod_nonneg(const Int& a, const Int& m) {
  if (m == 0) throw std::domain_error("mod_nonneg: zero modulus");
  Int r;
  // mpz_mod ignores the sign of the divisor and returns a result in [0, |m|).
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool congruent(const Int& a, const Int& b, const Int& m) {
  return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) != 0;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int gcd_all(std::span<const Int> values) {
  Int g = 0;
  for (const Int& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace apery
