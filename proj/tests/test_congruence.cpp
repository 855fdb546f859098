#include "apery/congruence.hpp"

#include "apery/binomial.hpp"
#include "apery/sequences.hpp"

#include <gtest/gtest.h>

#include <map>
#include <vector>

namespace apery {
namespace {

// Independent route to M_alpha: transform values by the defining sum
// v_n = sum_k C(n,k) (-alpha)^{n-k} u_k, then a running gcd.
Int oracle_M(const SequenceSpec& spec, long alpha, TermSource norm) {
  long depth = spec.recurrence_order() + 1;
  TermTable t = generate(spec, norm, depth);
  Int g = 0;
  for (long n = 1; n <= depth; ++n) {
    Int v = 0;
    for (long k = 0; k <= n; ++k)
      v += binom(n, k) * pow_int(Int(-alpha), n - k) * t.terms[k];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

TEST(ComputeM, TableValues) {
  EXPECT_EQ(compute_M(spec_for(SequenceId::A), 2), 6);
  EXPECT_EQ(compute_M(spec_for(SequenceId::D), 3), 10);
  EXPECT_EQ(compute_M(spec_for(SequenceId::Gamma), 5), 24);
  EXPECT_EQ(compute_M(spec_for(SequenceId::E), 4), 4);
  EXPECT_EQ(compute_M(spec_for(SequenceId::S10), 2), 2);
  EXPECT_EQ(compute_M(spec_for(SequenceId::Epsilon), 4), 24);
  for (const auto& spec : all_specs())
    EXPECT_EQ(compute_M(spec, spec.table_u1), spec.table_modulus) << spec.name;
}

TEST(ComputeM, NormalizationChoicesForEtaS18) {
  const SequenceSpec& eta = spec_for(SequenceId::Eta);
  const SequenceSpec& s18 = spec_for(SequenceId::S18);
  EXPECT_EQ(compute_M(eta, 10, TermSource::Canonical), 10);
  EXPECT_EQ(compute_M(eta, 5, TermSource::Recurrence), 10);
  EXPECT_EQ(compute_M(s18, 12, TermSource::Canonical), 12);
  EXPECT_EQ(compute_M(s18, 6, TermSource::Recurrence), 6);
}

TEST(ComputeM, MatchesDirectSumOracle) {
  for (const auto& spec : all_specs()) {
    for (long a : {-7L, -1L, 0L, 1L, 2L, 5L, 13L}) {
      EXPECT_EQ(compute_M(spec, Int(a)),
                oracle_M(spec, a, TermSource::Canonical))
          << spec.name << " alpha = " << a;
      EXPECT_EQ(compute_M(spec, Int(a), TermSource::Recurrence),
                oracle_M(spec, a, TermSource::Recurrence))
          << spec.name << " alpha = " << a;
    }
  }
}

TEST(ComputeM, ClosedFormInWindow) {
  // M_alpha = gcd(u_1 - alpha, M_{u_1}) for the two worked sequences.
  for (SequenceId id : {SequenceId::D, SequenceId::Gamma}) {
    const SequenceSpec& spec = spec_for(id);
    Int M = compute_M(spec, spec.table_u1);
    for (long a = -10; a <= 10; ++a) {
      Int expected;
      Int diff = spec.table_u1 - a;
      mpz_gcd(expected.get_mpz_t(), diff.get_mpz_t(), M.get_mpz_t());
      EXPECT_EQ(compute_M(spec, Int(a)), expected)
          << spec.name << " alpha = " << a;
    }
  }
}

TEST(Theorem1, WorkedCases) {
  Theorem1Report rep = theorem1_check(spec_for(SequenceId::A), 2, 100);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.M_alpha, 6);
  EXPECT_EQ(rep.modulus, 6);
  EXPECT_TRUE(rep.witness.empty());

  rep = theorem1_check(spec_for(SequenceId::Gamma), 5, 100);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.M_alpha, 24);
  EXPECT_EQ(rep.modulus, 6);  // radical(24)
}

TEST(Theorem1, VacuousWhenModulusOne) {
  // gcd(u_1 - 0, 10) = 1 for D, so the congruence statement is empty.
  Theorem1Report rep = theorem1_check(spec_for(SequenceId::D), 0, 50);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.M_alpha, 1);
  EXPECT_EQ(rep.modulus, 1);
}

TEST(Theorem1, SweepSmall) {
  for (const auto& spec : all_specs())
    for (long a = -6; a <= 6; ++a)
      EXPECT_TRUE(theorem1_check(spec, Int(a), 80).passed())
          << spec.name << " alpha = " << a;
}

TEST(Theorem1, RejectsBadArguments) {
  EXPECT_THROW(theorem1_check(spec_for(SequenceId::A), 2, 0),
               std::invalid_argument);
}

TEST(Theorem2, CertificateForD) {
  CongruenceCertificate cert =
      theorem2_check(spec_for(SequenceId::D), 100, -10, 10);
  EXPECT_TRUE(cert.passed()) << cert.witness;
  EXPECT_EQ(cert.id, SequenceId::D);
  EXPECT_EQ(cert.u1, 3);
  EXPECT_EQ(cert.M, 10);
  EXPECT_EQ(cert.M_radical, 10);
  EXPECT_EQ(cert.M_squarefree_part, 10);
  EXPECT_EQ(cert.verified_to, 100);
  EXPECT_LE(cert.stable_from, 3);
  ASSERT_EQ(cert.gcd_profile.size(), 100u);
  EXPECT_EQ(cert.gcd_profile[0], (std::pair<long, Int>(1, 0)));  // v_1 = 0
  EXPECT_EQ(cert.gcd_profile[1].second, 10);
  EXPECT_EQ(cert.gcd_profile[2].second, 10);
  EXPECT_EQ(cert.gcd_profile.back().second, 10);
}

TEST(Theorem2, CertificateForGamma) {
  CongruenceCertificate cert =
      theorem2_check(spec_for(SequenceId::Gamma), 80, -10, 10);
  EXPECT_TRUE(cert.passed()) << cert.witness;
  EXPECT_EQ(cert.u1, 5);
  EXPECT_EQ(cert.M, 24);
  EXPECT_EQ(cert.M_radical, 6);
  EXPECT_EQ(cert.M_squarefree_part, 3);
  EXPECT_LE(cert.stable_from, 4);
}

TEST(Theorem2, CertificatesForAllSpecsSmall) {
  for (const auto& spec : all_specs()) {
    CongruenceCertificate cert = theorem2_check(spec, 40, -8, 8);
    EXPECT_TRUE(cert.passed()) << spec.name << ": " << cert.witness;
    EXPECT_EQ(cert.u1, spec.table_u1) << spec.name;
    EXPECT_EQ(cert.M, spec.table_modulus) << spec.name;
    EXPECT_LE(cert.stable_from, spec.recurrence_order() + 1) << spec.name;
    // profile is non-increasing under divisibility
    for (size_t k = 1; k < cert.gcd_profile.size(); ++k) {
      const Int& prev = cert.gcd_profile[k - 1].second;
      const Int& cur = cert.gcd_profile[k].second;
      EXPECT_TRUE(mpz_divisible_p(prev.get_mpz_t(), cur.get_mpz_t()))
          << spec.name << " K = " << cert.gcd_profile[k].first;
    }
  }
}

TEST(Theorem2, RecurrenceNormalizationForEtaS18) {
  CongruenceCertificate eta = theorem2_check(
      spec_for(SequenceId::Eta), 40, -8, 8, TermSource::Recurrence);
  EXPECT_TRUE(eta.passed()) << eta.witness;
  EXPECT_EQ(eta.normalization, TermSource::Recurrence);
  EXPECT_EQ(eta.u1, 5);
  EXPECT_EQ(eta.M, 10);

  CongruenceCertificate s18 = theorem2_check(
      spec_for(SequenceId::S18), 40, -8, 8, TermSource::Recurrence);
  EXPECT_TRUE(s18.passed()) << s18.witness;
  EXPECT_EQ(s18.u1, 6);
  EXPECT_EQ(s18.M, 6);
}

TEST(Theorem2, RejectsTooSmallDepth) {
  EXPECT_THROW(theorem2_check(spec_for(SequenceId::D), 2, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(theorem2_check(spec_for(SequenceId::Gamma), 3, 0, 0),
               std::invalid_argument);
}

TEST(Gauss, SmallSweeps) {
  static const long primes[] = {2, 3, 5};
  CheckReport rep = gauss_check(spec_for(SequenceId::D), 3, primes, 120);
  EXPECT_TRUE(rep.passed()) << rep.witness;
  EXPECT_TRUE(rep.witness.empty());
  for (const auto& spec : all_specs()) {
    EXPECT_TRUE(gauss_check(spec, 0, primes, 60).passed()) << spec.name;
    EXPECT_TRUE(gauss_check(spec, spec.table_u1, primes, 60).passed())
        << spec.name;
  }
}

TEST(Gauss, RecurrenceNormalization) {
  static const long primes[] = {2, 3, 5};
  for (SequenceId id : {SequenceId::Eta, SequenceId::S18}) {
    const SequenceSpec& spec = spec_for(id);
    EXPECT_TRUE(gauss_check(spec, spec.recurrence_u1(), primes, 60,
                            TermSource::Recurrence)
                    .passed())
        << spec.name;
  }
}

TEST(Gauss, RejectsBadArguments) {
  static const long primes[] = {2};
  EXPECT_THROW(gauss_check(spec_for(SequenceId::A), 0, {}, 50),
               std::invalid_argument);
  EXPECT_THROW(gauss_check(spec_for(SequenceId::A), 0, primes, 1),
               std::invalid_argument);
}

TEST(AuxiliaryLemma, WorkedCases) {
  std::vector<Int> f = {1, 0, 1};  // x^2 + 1
  EXPECT_TRUE(auxiliary_lemma_check(3, f, -50, 50).passed());
  std::vector<Int> ident = {0, 1};  // x
  EXPECT_TRUE(auxiliary_lemma_check(0, ident, -50, 50).passed());
  std::vector<Int> cubic = {-7, 3, 0, 2};
  for (long c = -5; c <= 5; ++c)
    EXPECT_TRUE(auxiliary_lemma_check(Int(c), cubic, -30, 30).passed())
        << "c = " << c;
  std::vector<Int> constant = {11};
  EXPECT_TRUE(auxiliary_lemma_check(4, constant, -20, 20).passed());
}

TEST(Batteries, SpecialCongruences) {
  std::vector<NamedCheck> checks = special_congruences_check(200);
  ASSERT_EQ(checks.size(), 7u);
  const char* names[] = {
      "special/gamma-pow5-mod8",   "special/E-pow4-mod4",
      "special/alpha-pow4-mod4",   "special/s18-pow12-mod4",
      "special/epsilon-pow4-mod8", "special/s7-pow4-mod8",
      "special/delta-pow3-mod8",
  };
  for (size_t i = 0; i < checks.size(); ++i) {
    EXPECT_EQ(checks[i].name, names[i]);
    EXPECT_TRUE(checks[i].report.passed())
        << checks[i].name << ": " << checks[i].report.witness;
  }
  EXPECT_THROW(special_congruences_check(2), std::invalid_argument);
}

TEST(Batteries, ProofSteps) {
  std::vector<NamedCheck> checks = proof_step_congruences_check(200, 80);
  ASSERT_EQ(checks.size(), 7u);
  const char* names[] = {
      "steps/epsilon-odd-index-mod8",
      "steps/epsilon-doubling-mod8",
      "steps/binomial-double-index-mod4",
      "steps/s7-odd-index-recurrence-mod8",
      "steps/s7-doubling-mod8",
      "steps/delta-odd-index-mod8",
      "steps/delta-doubling-mod8",
  };
  for (size_t i = 0; i < checks.size(); ++i) {
    EXPECT_EQ(checks[i].name, names[i]);
    EXPECT_TRUE(checks[i].report.passed())
        << checks[i].name << ": " << checks[i].report.witness;
  }
}

TEST(Batteries, EpsilonDoublingBoundaryIsSharp) {
  // a_2 = 40 ≡ 0 but a_1 = 4 (mod 8): the doubling congruence genuinely
  // starts at n = 2, which is why the battery checks from there.
  TermTable eps =
      generate(spec_for(SequenceId::Epsilon), TermSource::Canonical, 4);
  EXPECT_EQ(eps.terms[1], 4);
  EXPECT_EQ(eps.terms[2], 40);
  EXPECT_FALSE(congruent(eps.terms[2], eps.terms[1], 8));
  EXPECT_TRUE(congruent(eps.terms[4], eps.terms[2], 8));
}

TEST(Batteries, Motivating) {
  std::vector<NamedCheck> checks = motivating_congruences_check(300);
  ASSERT_EQ(checks.size(), 5u);
  const char* names[] = {
      "motivating/gamma-pow5-mod24", "motivating/gamma-pow5-mod8",
      "motivating/gamma-alternating-mod3", "motivating/D-pow3-mod10",
      "motivating/D-last-digit-cycle",
  };
  for (size_t i = 0; i < checks.size(); ++i) {
    EXPECT_EQ(checks[i].name, names[i]);
    EXPECT_TRUE(checks[i].report.passed())
        << checks[i].name << ": " << checks[i].report.witness;
  }
  EXPECT_THROW(motivating_congruences_check(0), std::invalid_argument);
}

TEST(Batteries, MotivatingAgainstLiteralLoop) {
  // Re-derive the gamma mod 24 statement with nothing but mod arithmetic.
  TermTable g = generate(spec_for(SequenceId::Gamma), TermSource::Canonical, 50);
  Int pw = 1;
  for (long n = 0; n <= 50; ++n) {
    EXPECT_EQ(mod_nonneg(g.terms[n], 24), pw) << "n = " << n;
    pw = mod_nonneg(pw * 5, 24);
  }
  // And the alternating statement mod 3.
  for (long n = 0; n <= 50; ++n)
    EXPECT_EQ(mod_nonneg(g.terms[n], 3), n % 2 ? 2 : 1) << "n = " << n;
}

}  // namespace
}  // namespace apery
