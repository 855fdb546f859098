#include "apery/congruence.hpp"

#include <algorithm>
#include <sstream>

namespace apery {

namespace {

long certificate_depth(const SequenceSpec& spec) {
  return spec.recurrence_order() + 1;  // 3 for second kind, 4 for first kind
}

std::vector<Int> transform_values(const SequenceSpec& spec, const Int& alpha,
                                  long n_max, TermSource normalization) {
  TermTable t = generate(spec, normalization, n_max);
  return binomial_transform(t, alpha, n_max).values;
}

// u_n ≡ base^n (mod modulus) for n_lo <= n <= n_max over the given terms.
CheckReport power_congruence(std::span<const Int> terms, const Int& base,
                             const Int& modulus, long n_lo = 0) {
  CheckReport rep;
  if (modulus == 1) return rep;  // vacuous
  Int pw = mod_nonneg(pow_int(base, n_lo), modulus);
  for (long n = n_lo; n < static_cast<long>(terms.size()); ++n) {
    if (!congruent(terms[n], pw, modulus)) {
      std::ostringstream w;
      w << "n = " << n << ": term ≡ " << mod_nonneg(terms[n], modulus).get_str()
        << " but base^n ≡ " << pw.get_str() << " (mod " << modulus.get_str()
        << ")";
      return {CheckStatus::Fail, w.str()};
    }
    pw = mod_nonneg(pw * base, modulus);
  }
  return rep;
}

}  // namespace

Int compute_M(const SequenceSpec& spec, const Int& alpha,
              TermSource normalization) {
  long depth = certificate_depth(spec);
  std::vector<Int> v = transform_values(spec, alpha, depth, normalization);
  return gcd_all(std::span<const Int>(v).subspan(1));
}

Theorem1Report theorem1_check(const SequenceSpec& spec, const Int& alpha,
                              long n_max, TermSource normalization) {
  if (n_max < 1) throw std::invalid_argument("theorem1_check: n_max < 1");
  Theorem1Report rep;
  rep.M_alpha = compute_M(spec, alpha, normalization);
  if (rep.M_alpha == 0)
    throw std::domain_error("theorem1_check: zero certificate modulus");
  rep.modulus = radical(rep.M_alpha);
  if (rep.modulus == 1) return rep;  // vacuous pass
  TermTable t = generate(spec, normalization, n_max);
  CheckReport pc = power_congruence(t.terms, alpha, rep.modulus);
  rep.status = pc.status;
  rep.witness = pc.witness;
  return rep;
}

CongruenceCertificate theorem2_check(const SequenceSpec& spec, long n_max,
                                     long alpha_lo, long alpha_hi,
                                     TermSource normalization) {
  long depth = certificate_depth(spec);
  if (n_max < depth) throw std::invalid_argument("theorem2_check: n_max too small");
  CongruenceCertificate cert;
  cert.id = spec.id;
  cert.normalization = normalization;
  cert.verified_to = n_max;

  TermTable table = generate(spec, normalization, n_max);
  cert.u1 = table.terms[1];
  std::vector<Int> v = binomial_transform(table, cert.u1, n_max).values;

  Int g = 0;
  cert.gcd_profile.reserve(n_max);
  for (long k = 1; k <= n_max; ++k) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[k].get_mpz_t());
    cert.gcd_profile.emplace_back(k, g);
  }
  cert.M = cert.gcd_profile[depth - 1].second;
  if (cert.M == 0)
    throw std::domain_error("theorem2_check: zero certificate modulus");
  cert.M_radical = radical(cert.M);
  cert.M_squarefree_part = squarefree_part(cert.M);

  const Int& final_g = cert.gcd_profile.back().second;
  cert.stable_from = 1;
  for (long k = n_max; k >= 1; --k) {
    if (cert.gcd_profile[k - 1].second != final_g) {
      cert.stable_from = k + 1;
      break;
    }
  }

  auto fail = [&](const std::string& w) {
    if (cert.status == CheckStatus::Pass) {
      cert.status = CheckStatus::Fail;
      cert.witness = w;
    }
  };

  // (ii) u_n ≡ u_1^n modulo the full certificate modulus.
  CheckReport pc = power_congruence(table.terms, cert.u1, cert.M);
  if (!pc.passed()) fail("congruence: " + pc.witness);

  // (iii) the profile already sits at M from the defining depth onward.
  for (long k = depth; k <= n_max; ++k)
    if (cert.gcd_profile[k - 1].second != cert.M) {
      std::ostringstream w;
      w << "gcd profile at K = " << k << " is "
        << cert.gcd_profile[k - 1].second.get_str() << ", expected "
        << cert.M.get_str();
      fail(w.str());
      break;
    }

  // (iv) every window modulus matches gcd(u_1 - alpha, M) and divides M.
  for (long a = alpha_lo; a <= alpha_hi; ++a) {
    Int m = compute_M(spec, Int(a), normalization);
    Int closed;
    Int diff = cert.u1 - a;
    mpz_gcd(closed.get_mpz_t(), diff.get_mpz_t(), cert.M.get_mpz_t());
    if (m != closed || cert.M % m != 0) {
      std::ostringstream w;
      w << "alpha = " << a << ": M_alpha = " << m.get_str()
        << ", gcd(u1 - alpha, M) = " << closed.get_str();
      fail(w.str());
      break;
    }
  }

  return cert;
}

CheckReport gauss_check(const SequenceSpec& spec, const Int& alpha,
                        std::span<const long> primes, long n_max,
                        TermSource normalization) {
  if (primes.empty())
    throw std::invalid_argument("gauss_check: no primes given");
  if (n_max < 2) throw std::invalid_argument("gauss_check: n_max < 2");
  std::vector<Int> v = transform_values(spec, alpha, n_max, normalization);
  for (long p : primes) {
    Int pk = p;
    for (long k = 1; pk <= n_max; ++k, pk *= p) {
      Int modulus = pk;
      long step = pk.get_si();
      long prev_step = step / p;
      for (long n = 1; n * step <= n_max; ++n) {
        if (!congruent(v[n * step], v[n * prev_step], modulus)) {
          std::ostringstream w;
          w << "p = " << p << ", k = " << k << ", n = " << n << ": v_"
            << n * step << " !≡ v_" << n * prev_step << " (mod "
            << modulus.get_str() << ")";
          return {CheckStatus::Fail, w.str()};
        }
      }
    }
  }
  return {};
}

CheckReport auxiliary_lemma_check(const Int& c, std::span<const Int> f_coeffs,
                                  long alpha_lo, long alpha_hi) {
  auto eval = [&](const Int& x) {
    Int acc = 0;
    for (auto it = f_coeffs.rbegin(); it != f_coeffs.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  };
  Int fc = eval(c);
  for (long a = alpha_lo; a <= alpha_hi; ++a) {
    Int shift = c - a;  // -alpha + c
    Int fa = eval(Int(a));
    Int lhs, rhs;
    mpz_gcd(lhs.get_mpz_t(), shift.get_mpz_t(), fa.get_mpz_t());
    mpz_gcd(rhs.get_mpz_t(), shift.get_mpz_t(), fc.get_mpz_t());
    if (lhs != rhs) {
      std::ostringstream w;
      w << "alpha = " << a << ": gcd(-alpha+c, f(alpha)) = " << lhs.get_str()
        << " but gcd(-alpha+c, f(c)) = " << rhs.get_str();
      return {CheckStatus::Fail, w.str()};
    }
  }
  return {};
}

std::vector<NamedCheck> special_congruences_check(long n_max) {
  if (n_max < 4)
    throw std::invalid_argument("special_congruences_check: n_max < 4");
  struct Entry {
    const char* name;
    SequenceId id;
    long base;
    long modulus;
  };
  static const Entry entries[] = {
      {"special/gamma-pow5-mod8", SequenceId::Gamma, 5, 8},
      {"special/E-pow4-mod4", SequenceId::E, 4, 4},
      {"special/alpha-pow4-mod4", SequenceId::Alpha, 4, 4},
      {"special/s18-pow12-mod4", SequenceId::S18, 12, 4},
      {"special/epsilon-pow4-mod8", SequenceId::Epsilon, 4, 8},
      {"special/s7-pow4-mod8", SequenceId::S7, 4, 8},
      {"special/delta-pow3-mod8", SequenceId::Delta, 3, 8},
  };
  std::vector<NamedCheck> out;
  for (const Entry& e : entries) {
    TermTable t = generate(spec_for(e.id), TermSource::Canonical, n_max);
    out.push_back({e.name, power_congruence(t.terms, e.base, e.modulus)});
  }
  return out;
}

std::vector<NamedCheck> proof_step_congruences_check(long n_max,
                                                     long doubling_n_max,
                                                     long binom_max) {
  if (n_max < 8)
    throw std::invalid_argument("proof_step_congruences_check: n_max < 8");
  long table_max = std::max(n_max, 2 * doubling_n_max);
  TermTable eps = generate(spec_for(SequenceId::Epsilon),
                           TermSource::Canonical, table_max);
  TermTable s7 =
      generate(spec_for(SequenceId::S7), TermSource::Canonical, table_max);
  TermTable del =
      generate(spec_for(SequenceId::Delta), TermSource::Canonical, table_max);
  const Int eight = 8;
  std::vector<NamedCheck> out;

  auto run = [&](const char* name, auto&& body) {
    CheckReport rep;
    body(rep);
    out.push_back({name, std::move(rep)});
  };
  auto witness_at = [](CheckReport& rep, long n, const std::string& text) {
    rep.status = CheckStatus::Fail;
    std::ostringstream w;
    w << "n = " << n << ": " << text;
    rep.witness = w.str();
  };

  // epsilon: a_{2n+1} ≡ 4 a_{2n} (mod 8).
  run("steps/epsilon-odd-index-mod8", [&](CheckReport& rep) {
    for (long n = 0; 2 * n + 1 <= n_max; ++n)
      if (!congruent(eps.terms[2 * n + 1], 4 * eps.terms[2 * n], eight)) {
        witness_at(rep, n, "a_{2n+1} !≡ 4 a_{2n} (mod 8)");
        return;
      }
  });

  // epsilon: a_{2n} ≡ a_n (mod 8) for n >= 2 (n = 1 genuinely fails:
  // a_2 = 40 ≡ 0 while a_1 = 4).
  run("steps/epsilon-doubling-mod8", [&](CheckReport& rep) {
    for (long n = 2; n <= doubling_n_max; ++n)
      if (!congruent(eps.terms[2 * n], eps.terms[n], eight)) {
        witness_at(rep, n, "a_{2n} !≡ a_n (mod 8)");
        return;
      }
  });

  // C(2s, 2t) ≡ C(s, t) (mod 4).
  run("steps/binomial-double-index-mod4", [&](CheckReport& rep) {
    BinomialCache bc;
    const Int four = 4;
    for (long s = 0; s <= binom_max; ++s)
      for (long t = 0; t <= s; ++t)
        if (!congruent(bc.get(2 * s, 2 * t), bc.get(s, t), four)) {
          witness_at(rep, s, "C(2s,2t) !≡ C(s,t) (mod 4) at t = " +
                                 std::to_string(t));
          return;
        }
  });

  // The s7 recurrence at odd index, reduced mod 8:
  // (2n+1)^3 b_{2n+1} - 2(4n+1)(26n^2+13n+2) b_{2n} - 6n(6n-1)(6n+1) b_{2n-1}.
  run("steps/s7-odd-index-recurrence-mod8", [&](CheckReport& rep) {
    for (long n = 1; 2 * n + 1 <= n_max; ++n) {
      Int m = n;
      Int lhs = (2 * m + 1) * (2 * m + 1) * (2 * m + 1) * s7.terms[2 * n + 1] -
                2 * (4 * m + 1) * (26 * m * m + 13 * m + 2) * s7.terms[2 * n] -
                6 * m * (6 * m - 1) * (6 * m + 1) * s7.terms[2 * n - 1];
      if (!congruent(lhs, 0, eight)) {
        witness_at(rep, n, "odd-index recurrence instance !≡ 0 (mod 8)");
        return;
      }
    }
  });

  // s7: b_{2n} ≡ b_n (mod 8) for n >= 2.
  run("steps/s7-doubling-mod8", [&](CheckReport& rep) {
    for (long n = 2; n <= doubling_n_max; ++n)
      if (!congruent(s7.terms[2 * n], s7.terms[n], eight)) {
        witness_at(rep, n, "b_{2n} !≡ b_n (mod 8)");
        return;
      }
  });

  // delta: c_{2n+1} ≡ 3 c_{2n} (mod 8).
  run("steps/delta-odd-index-mod8", [&](CheckReport& rep) {
    for (long n = 0; 2 * n + 1 <= n_max; ++n)
      if (!congruent(del.terms[2 * n + 1], 3 * del.terms[2 * n], eight)) {
        witness_at(rep, n, "c_{2n+1} !≡ 3 c_{2n} (mod 8)");
        return;
      }
  });

  // delta: c_{2n} ≡ 3^n c_n (mod 8).
  run("steps/delta-doubling-mod8", [&](CheckReport& rep) {
    Int pw = 1;
    for (long n = 0; n <= doubling_n_max; ++n) {
      if (!congruent(del.terms[2 * n], pw * del.terms[n], eight)) {
        witness_at(rep, n, "c_{2n} !≡ 3^n c_n (mod 8)");
        return;
      }
      pw = mod_nonneg(pw * 3, eight);
    }
  });

  return out;
}

std::vector<NamedCheck> motivating_congruences_check(long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("motivating_congruences_check: n_max < 1");
  TermTable gam =
      generate(spec_for(SequenceId::Gamma), TermSource::Canonical, n_max);
  TermTable d = generate(spec_for(SequenceId::D), TermSource::Canonical, n_max);
  std::vector<NamedCheck> out;
  out.push_back({"motivating/gamma-pow5-mod24",
                 power_congruence(gam.terms, 5, 24)});
  out.push_back(
      {"motivating/gamma-pow5-mod8", power_congruence(gam.terms, 5, 8)});
  out.push_back(
      {"motivating/gamma-alternating-mod3", power_congruence(gam.terms, -1, 3)});
  out.push_back({"motivating/D-pow3-mod10", power_congruence(d.terms, 3, 10)});

  // Last decimal digits of D cycle with period 4: 1, 3, 9, 7.
  CheckReport cycle;
  static const long digits[4] = {1, 3, 9, 7};
  for (long n = 0; n <= n_max; ++n)
    if (mod_nonneg(d.terms[n], 10) != digits[n % 4]) {
      std::ostringstream w;
      w << "n = " << n << ": last digit "
        << mod_nonneg(d.terms[n], 10).get_str() << ", expected "
        << digits[n % 4];
      cycle = {CheckStatus::Fail, w.str()};
      break;
    }
  out.push_back({"motivating/D-last-digit-cycle", std::move(cycle)});
  return out;
}

}  // namespace apery
