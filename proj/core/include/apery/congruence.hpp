#pragma once

// Congruence certification for the binomial transforms.
//
// For a sequence with terms (u_n) and integer alpha, write v_n(alpha) for the
// binomial transform.  The certificate modulus is
//
//   M_alpha = gcd(v_1, ..., v_depth)        depth = 3 (second kind) / 4 (first kind)
//
// and the certified statements are:  u_n ≡ alpha^n (mod rad(M_alpha)) for all
// n;  at alpha = u_1 the congruence holds modulo M_{u_1} itself, the gcd
// profile is already stable at the defining depth, and every other M_alpha
// equals gcd(u_1 - alpha, M_{u_1}).  Transforms also satisfy the Gauss
// congruences v_{n p^k} ≡ v_{n p^{k-1}} (mod p^k).

#include "apery/factorization.hpp"
#include "apery/integer.hpp"
#include "apery/sequences.hpp"
#include "apery/transforms.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace apery {

enum class CheckStatus { Pass, Fail };

struct CheckReport {
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // first counterexample when Fail, else empty

  bool passed() const { return status == CheckStatus::Pass; }
};

struct NamedCheck {
  std::string name;
  CheckReport report;
};

// gcd(v_1..v_depth(alpha)) over the table of the given normalization
// (Canonical by default; Recurrence gives the alternative eta/s18 reading).
Int compute_M(const SequenceSpec& spec, const Int& alpha,
              TermSource normalization = TermSource::Canonical);

struct Theorem1Report {
  CheckStatus status = CheckStatus::Pass;
  Int M_alpha;
  Int modulus;  // radical(M_alpha); modulus 1 passes vacuously
  std::string witness;

  bool passed() const { return status == CheckStatus::Pass; }
};

// u_n ≡ alpha^n (mod radical(M_alpha)) for 0 <= n <= n_max.
Theorem1Report theorem1_check(const SequenceSpec& spec, const Int& alpha,
                              long n_max,
                              TermSource normalization = TermSource::Canonical);

struct CongruenceCertificate {
  SequenceId id;
  TermSource normalization;
  Int u1;          // first term of the certified table (the alpha used)
  Int M;           // M_{u_1}
  Int M_radical;
  Int M_squarefree_part;
  // (K, gcd(v_1..v_K(u_1))) for K = 1..n_max; non-increasing under
  // divisibility.
  std::vector<std::pair<long, Int>> gcd_profile;
  long stable_from;  // least K with the profile constant from K to n_max
  long verified_to;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;

  bool passed() const { return status == CheckStatus::Pass; }
};

// Certifies, at alpha = u_1: (i) M computed at the defining depth; (ii)
// u_n ≡ u_1^n (mod M) for n <= n_max; (iii) the gcd profile equals M from the
// defining depth out to n_max; (iv) for every alpha in [alpha_lo, alpha_hi],
// compute_M(spec, alpha) = gcd(u_1 - alpha, M), which in particular divides M.
CongruenceCertificate theorem2_check(const SequenceSpec& spec, long n_max,
                                     long alpha_lo, long alpha_hi,
                                     TermSource normalization = TermSource::Canonical);

// v_{n p^k}(alpha) ≡ v_{n p^{k-1}}(alpha) (mod p^k) for every p in primes and
// all n, k >= 1 with n p^k <= n_max.
CheckReport gauss_check(const SequenceSpec& spec, const Int& alpha,
                        std::span<const long> primes, long n_max,
                        TermSource normalization = TermSource::Canonical);

// gcd(-alpha + c, f(alpha)) = gcd(-alpha + c, f(c)) for alpha in
// [alpha_lo, alpha_hi]; f given by coefficients, constant first; convention
// gcd(0, m) = |m|.
CheckReport auxiliary_lemma_check(const Int& c, std::span<const Int> f_coeffs,
                                  long alpha_lo, long alpha_hi);

// The seven headline congruences over the canonical tables, 0 <= n <= n_max:
//   gamma ≡ 5^n (8), E ≡ 4^n (4), alpha ≡ 4^n (4), s18 ≡ 12^n (4),
//   epsilon ≡ 4^n (8), s7 ≡ 4^n (8), delta ≡ 3^n (8).
// The s18 statement is specific to the canonical (doubled) normalization.
std::vector<NamedCheck> special_congruences_check(long n_max);

// Doubling / odd-index congruences behind the headline ones, plus the
// double-index binomial congruence C(2s, 2t) ≡ C(s, t) (mod 4) and the mod-8
// instance of the s7 recurrence at odd index.  Doubling steps run to
// doubling_n_max, everything else to n_max.
std::vector<NamedCheck> proof_step_congruences_check(long n_max,
                                                     long doubling_n_max,
                                                     long binom_max = 200);

// gamma ≡ 5^n (mod 24), (mod 8), gamma ≡ (-1)^n (mod 3), D ≡ 3^n (mod 10),
// and the 1,3,9,7 last-digit cycle of D.
std::vector<NamedCheck> motivating_congruences_check(long n_max);

}  // namespace apery
