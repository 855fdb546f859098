#include "apery/verification.hpp"

#include "apery/congruence.hpp"
#include "apery/theta.hpp"
#include "apery/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace apery {

std::string_view result_status_name(ResultStatus s) {
  switch (s) {
    case ResultStatus::Pass: return "pass";
    case ResultStatus::Fail: return "fail";
    case ResultStatus::Note: return "note";
  }
  return "?";
}

namespace {

struct Task {
  CheckResult seed;  // name / sequence / params preset
  std::function<void(CheckResult&)> body;
};

void fail(CheckResult& r, std::string witness) {
  r.status = ResultStatus::Fail;
  r.witness = std::move(witness);
}

void take(CheckResult& r, const CheckReport& rep) {
  if (!rep.passed()) fail(r, rep.witness);
}

std::string int_str(const Int& v) { return v.get_str(); }

// Normalization to use for a sequence in the certificate checks.
TermSource norm_for(const SequenceSpec& spec, const SuiteOptions& opt) {
  return (spec.convention_sensitive &&
          opt.eta_normalization == TermSource::Recurrence)
             ? TermSource::Recurrence
             : TermSource::Canonical;
}

std::vector<Int> sorted_alphas(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Pulls one named entry out of a congruence battery.
void from_battery(CheckResult& r, const std::vector<NamedCheck>& battery,
                  const std::string& name) {
  for (const NamedCheck& c : battery)
    if (c.name == name) {
      take(r, c.report);
      return;
    }
  fail(r, "check not produced by its battery");
}

ThetaOperator untransformed_operator(const SequenceSpec& spec) {
  if (spec.kind == SequenceKind::SecondKind)
    return build_L1(spec.second.A, spec.second.B, spec.second.lambda);
  return build_L2(spec.first.a, spec.first.b, spec.first.c, spec.first.d);
}

void build_tasks(const SuiteOptions& opt, std::vector<Task>& tasks) {
  auto add = [&](std::string name, std::string sequence, std::string params,
                 std::function<void(CheckResult&)> body) {
    Task t;
    t.seed.check_name = std::move(name);
    t.seed.sequence = std::move(sequence);
    t.seed.params = std::move(params);
    t.body = std::move(body);
    tasks.push_back(std::move(t));
  };
  const auto& specs = all_specs();

  // Canonical tables against the registry's (u_1, N) fixture.
  for (const SequenceSpec& spec : specs)
    add("tables", spec.name, "", [&spec](CheckResult& r) {
      TermTable t = generate(spec, TermSource::Canonical, 1);
      Int m = compute_M(spec, t.terms[1], TermSource::Canonical);
      std::ostringstream p;
      p << "u1=" << int_str(t.terms[1]) << " N=" << int_str(m);
      r.params = p.str();
      if (t.terms[1] != spec.table_u1 || m != spec.table_modulus)
        fail(r, "expected u1=" + int_str(spec.table_u1) +
                    " N=" + int_str(spec.table_modulus));
    });

  // Motivating congruences for gamma and D.
  {
    static const std::pair<const char*, const char*> entries[] = {
        {"motivating/gamma-pow5-mod24", "gamma"},
        {"motivating/gamma-pow5-mod8", "gamma"},
        {"motivating/gamma-alternating-mod3", "gamma"},
        {"motivating/D-pow3-mod10", "D"},
        {"motivating/D-last-digit-cycle", "D"},
    };
    for (const auto& [name, seq] : entries)
      add(name, seq, "n_max=" + std::to_string(opt.motivating_n_max),
          [name = std::string(name), &opt](CheckResult& r) {
            from_battery(r, motivating_congruences_check(opt.motivating_n_max),
                         name);
          });
  }

  // Theorem 1 sweep.
  for (const SequenceSpec& spec : specs) {
    std::ostringstream p;
    p << "alpha=" << opt.theorem1_alpha_lo << ".." << opt.theorem1_alpha_hi
      << " n_max=" << opt.theorem1_n_max;
    add("theorem1", spec.name, p.str(), [&spec, &opt](CheckResult& r) {
      TermSource norm = norm_for(spec, opt);
      for (long a = opt.theorem1_alpha_lo; a <= opt.theorem1_alpha_hi; ++a) {
        Theorem1Report rep =
            theorem1_check(spec, Int(a), opt.theorem1_n_max, norm);
        if (!rep.passed()) {
          fail(r, "alpha = " + std::to_string(a) + ": " + rep.witness);
          return;
        }
      }
    });
  }

  // Theorem 2 certificates.
  for (const SequenceSpec& spec : specs) {
    std::ostringstream p;
    p << "n_max=" << opt.theorem2_n_max << " alpha=" << opt.theorem2_alpha_lo
      << ".." << opt.theorem2_alpha_hi;
    add("theorem2", spec.name, p.str(), [&spec, &opt](CheckResult& r) {
      TermSource norm = norm_for(spec, opt);
      CongruenceCertificate cert =
          theorem2_check(spec, opt.theorem2_n_max, opt.theorem2_alpha_lo,
                         opt.theorem2_alpha_hi, norm);
      std::ostringstream p2;
      p2 << r.params << " u1=" << int_str(cert.u1) << " M=" << int_str(cert.M)
         << " stable_from=" << cert.stable_from;
      r.params = p2.str();
      if (!cert.passed()) {
        fail(r, cert.witness);
        return;
      }
      if (norm == TermSource::Canonical &&
          (cert.u1 != spec.table_u1 || cert.M != spec.table_modulus))
        fail(r, "certificate (u1, M) differs from the table fixture (" +
                    int_str(spec.table_u1) + ", " +
                    int_str(spec.table_modulus) + ")");
      else if (cert.stable_from > spec.recurrence_order() + 1)
        fail(r, "gcd profile not stable from the defining depth");
    });
  }

  // Gauss congruences at alpha = 0 and alpha = u_1.
  for (const SequenceSpec& spec : specs) {
    TermSource norm = norm_for(spec, opt);
    Int u1 = norm == TermSource::Canonical ? spec.table_u1
                                           : spec.recurrence_u1();
    for (const Int& alpha : sorted_alphas({Int(0), u1})) {
      std::ostringstream p;
      p << "alpha=" << int_str(alpha) << " primes=2,3,5 n_max="
        << opt.gauss_n_max;
      add("gauss", spec.name, p.str(),
          [&spec, alpha, norm, &opt](CheckResult& r) {
            static const long primes[] = {2, 3, 5};
            take(r, gauss_check(spec, alpha, primes, opt.gauss_n_max, norm));
          });
    }
  }

  // Operator pipeline.
  for (const SequenceSpec& spec : specs)
    add("operator/x0-reduction", spec.name, "", [&spec](CheckResult& r) {
      if (!(operator_for(spec, 0) == untransformed_operator(spec)))
        fail(r, "transformed operator at x = 0 differs structurally");
    });
  for (const SequenceSpec& spec : specs)
    add("operator/degree-bounds", spec.name, "alpha=-5..10",
        [&spec](CheckResult& r) {
          long bound = spec.kind == SequenceKind::SecondKind ? 2 : 3;
          for (long a = -5; a <= 10; ++a) {
            Recurrence rec = operator_to_recurrence(operator_for(spec, Int(a)));
            for (const ThetaPoly& p : rec.coeff_polys)
              if (p.degree() > bound) {
                fail(r, "alpha = " + std::to_string(a) +
                            ": coefficient degree " +
                            std::to_string(p.degree()) + " exceeds " +
                            std::to_string(bound));
                return;
              }
          }
        });
  for (const SequenceSpec& spec : specs)
    add("operator/untransformed-annihilation", spec.name,
        "order=" + std::to_string(opt.annihilation_order),
        [&spec, &opt](CheckResult& r) {
          TermTable t =
              generate(spec, TermSource::Recurrence, opt.annihilation_order);
          AnnihilationReport rep = check_annihilates(
              untransformed_operator(spec), series_of(t, opt.annihilation_order));
          if (!rep.ok)
            fail(r, "first nonzero residual at n = " +
                        std::to_string(*rep.first_bad_index));
        });
  for (const SequenceSpec& spec : specs) {
    const Int& u1 = spec.recurrence_u1();
    for (const Int& alpha : sorted_alphas({Int(0), Int(1), u1, u1 + 6})) {
      std::ostringstream p;
      p << "alpha=" << int_str(alpha) << " order=" << opt.annihilation_order
        << " normalization=recurrence";
      add("operator/annihilation", spec.name, p.str(),
          [&spec, alpha, &opt](CheckResult& r) {
            TermTable t =
                generate(spec, TermSource::Recurrence, opt.annihilation_order);
            TransformTable vt =
                binomial_transform(t, alpha, opt.annihilation_order);
            AnnihilationReport rep =
                check_annihilates(operator_for(spec, alpha),
                                  series_of(vt, opt.annihilation_order));
            if (!rep.ok)
              fail(r, "first nonzero residual at n = " +
                          std::to_string(*rep.first_bad_index));
          });
    }
  }
  add("operator/worked-example", "D", "alpha=3", [](CheckResult& r) {
    const SequenceSpec& d = spec_for(SequenceId::D);
    Recurrence rec = operator_to_recurrence(operator_for(d, 3));
    TermTable t = generate(d, TermSource::Canonical, 4);
    std::vector<Int> v = binomial_transform(t, 3, 4).values;
    if (v != std::vector<Int>{1, 0, 10, 30, 270}) {
      fail(r, "transform of D at alpha = 3 is not (1, 0, 10, 30, 270)");
      return;
    }
    if (rec.coeff_polys[0].eval(4) != 16 || rec.coeff_polys[1].eval(4) != -24 ||
        rec.coeff_polys[2].eval(4) != -360 ||
        rec.coeff_polys[3].eval(4) != -450) {
      fail(r, "recurrence coefficients at n = 4 are not (16, -24, -360, -450)");
      return;
    }
    if (Int(16) * 270 != Int(24) * 30 + Int(360) * 10)
      fail(r, "16*270 != 24*30 + 360*10");
  });
  // Measured (not asserted): the transformed operators on the canonical
  // doubled eta/s18 series.
  for (SequenceId id : {SequenceId::Eta, SequenceId::S18}) {
    const SequenceSpec& spec = spec_for(id);
    add("note/" + spec.name + "-canonical-annihilation", spec.name,
        "order=50 normalization=canonical", [&spec](CheckResult& r) {
          r.status = ResultStatus::Note;
          TermTable t = generate(spec, TermSource::Canonical, 50);
          std::ostringstream w;
          for (const Int& alpha :
               sorted_alphas({Int(0), Int(1), spec.table_u1,
                              spec.table_u1 + 6})) {
            TransformTable vt = binomial_transform(t, alpha, 50);
            AnnihilationReport rep = check_annihilates(
                operator_for(spec, alpha), series_of(vt, 50));
            w << "alpha=" << int_str(alpha) << ": ";
            if (rep.ok)
              w << "annihilated; ";
            else
              w << "residual at n=" << *rep.first_bad_index << "; ";
          }
          r.witness = w.str();
        });
  }

  // Generating function identity.
  for (const SequenceSpec& spec : specs)
    for (const Int& alpha : sorted_alphas({Int(0), Int(1), spec.table_u1})) {
      std::ostringstream p;
      p << "alpha=" << int_str(alpha) << " order=" << opt.gf_order;
      add("gf-identity", spec.name, p.str(),
          [&spec, alpha, &opt](CheckResult& r) {
            if (!verify_gf_identity(spec, alpha, opt.gf_order))
              fail(r, "coefficient mismatch within truncation order");
          });
    }

  // Special and step congruences.
  {
    static const std::pair<const char*, const char*> specials[] = {
        {"special/gamma-pow5-mod8", "gamma"},
        {"special/E-pow4-mod4", "E"},
        {"special/alpha-pow4-mod4", "alpha"},
        {"special/s18-pow12-mod4", "s18"},
        {"special/epsilon-pow4-mod8", "epsilon"},
        {"special/s7-pow4-mod8", "s7"},
        {"special/delta-pow3-mod8", "delta"},
    };
    for (const auto& [name, seq] : specials)
      add(name, seq, "n_max=" + std::to_string(opt.special_n_max),
          [name = std::string(name), &opt](CheckResult& r) {
            from_battery(r, special_congruences_check(opt.special_n_max), name);
          });
    static const std::pair<const char*, const char*> steps[] = {
        {"steps/epsilon-odd-index-mod8", "epsilon"},
        {"steps/epsilon-doubling-mod8", "epsilon"},
        {"steps/binomial-double-index-mod4", ""},
        {"steps/s7-odd-index-recurrence-mod8", "s7"},
        {"steps/s7-doubling-mod8", "s7"},
        {"steps/delta-odd-index-mod8", "delta"},
        {"steps/delta-doubling-mod8", "delta"},
    };
    for (const auto& [name, seq] : steps) {
      std::ostringstream p;
      p << "n_max=" << opt.steps_n_max << " doubling=" << opt.steps_doubling_max;
      add(name, seq, p.str(), [name = std::string(name), &opt](CheckResult& r) {
        from_battery(r,
                     proof_step_congruences_check(opt.steps_n_max,
                                                  opt.steps_doubling_max,
                                                  opt.steps_binom_max),
                     name);
      });
    }
  }

  // Formula vs recurrence cross-check.
  for (const SequenceSpec& spec : specs) {
    long n = spec.convention_sensitive ? opt.cross_check_sensitive_n_max
                                       : opt.cross_check_n_max;
    add("cross-check", spec.name, "n_max=" + std::to_string(n),
        [&spec, n](CheckResult& r) {
          CrossCheckReport rep = cross_check(spec, n);
          auto expected = spec.convention_sensitive
                              ? CrossCheckReport::Status::DoubledFormula
                              : CrossCheckReport::Status::Equal;
          if (rep.status != expected) {
            std::string got =
                rep.status == CrossCheckReport::Status::Equal ? "Equal"
                : rep.status == CrossCheckReport::Status::DoubledFormula
                    ? "DoubledFormula"
                    : "Mismatch at n = " +
                          std::to_string(rep.first_divergence.value_or(-1));
            fail(r, "cross_check reported " + got);
          }
        });
  }

  // Property suites.
  add("property/binomial-negation", "",
      "m,r in -" + std::to_string(opt.property_negation_bound) + ".." +
          std::to_string(opt.property_negation_bound),
      [&opt](CheckResult& r) {
        long b = opt.property_negation_bound;
        for (long m = -b; m <= b; ++m)
          for (long rr = 0; rr <= b; ++rr) {
            Int lhs = binom(m, rr);
            Int rhs = binom(rr - m - 1, rr);
            if (rr % 2) rhs = -rhs;
            if (lhs != rhs) {
              fail(r, "m = " + std::to_string(m) + ", r = " +
                          std::to_string(rr));
              return;
            }
          }
      });
  add("property/binomial-row-sums", "", "m=0..64", [](CheckResult& r) {
    BinomialCache bc;
    for (long m = 0; m <= 64; ++m) {
      Int sum = 0;
      for (long k = 0; k <= m; ++k) sum += bc.get(m, k);
      if (sum != pow_int(2, m)) {
        fail(r, "row " + std::to_string(m));
        return;
      }
    }
  });
  for (const SequenceSpec& spec : specs)
    add("property/inversion-roundtrip", spec.name,
        "alpha=-3..10 n_max=" + std::to_string(opt.roundtrip_n_max),
        [&spec, &opt](CheckResult& r) {
          TermTable t =
              generate(spec, TermSource::Canonical, opt.roundtrip_n_max);
          for (long a = -3; a <= 10; ++a) {
            TransformTable vt =
                binomial_transform(t, Int(a), opt.roundtrip_n_max);
            if (inverse_transform(vt, opt.roundtrip_n_max) != t.terms) {
              fail(r, "round trip failed at alpha = " + std::to_string(a));
              return;
            }
          }
        });
  // Equivalence of u_n ≡ alpha^n (mod N) with vanishing of the transform
  // mod N, for every modulus N in 2..30.
  for (const SequenceSpec& spec : specs)
    add("property/transform-equivalence", spec.name,
        "N=2..30 n_max=" + std::to_string(opt.equivalence_n_max),
        [&spec, &opt](CheckResult& r) {
          long n_max = opt.equivalence_n_max;
          TermTable t = generate(spec, TermSource::Canonical, n_max);
          for (const Int& alpha :
               sorted_alphas({Int(0), Int(1), spec.table_u1})) {
            TransformTable vt = binomial_transform(t, alpha, n_max);
            for (long modulus = 2; modulus <= 30; ++modulus) {
              Int mod = modulus;
              bool powers = true;
              Int pw = mod_nonneg(1, mod);
              for (long n = 0; n <= n_max && powers; ++n) {
                powers = congruent(t.terms[n], pw, mod);
                pw = mod_nonneg(pw * alpha, mod);
              }
              bool vanishing = true;
              for (long n = 1; n <= n_max && vanishing; ++n)
                vanishing = congruent(vt.values[n], 0, mod);
              if (powers != vanishing) {
                fail(r, "alpha = " + int_str(alpha) + ", N = " +
                            std::to_string(modulus) + ": sides disagree");
                return;
              }
            }
          }
        });
  add("property/squarefree-coprime", "", "n=1..2000", [](CheckResult& r) {
    for (long n = 1; n <= 2000; ++n) {
      Int s = squarefree_part(n);
      Int rest = Int(n) / s;
      Int g;
      mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), rest.get_mpz_t());
      Int rad = radical(n);
      if (s * rest != n || g != 1 || rad % s != 0 || Int(n) % rad != 0) {
        fail(r, "n = " + std::to_string(n));
        return;
      }
    }
  });
  {
    std::ostringstream p;
    p << "trials=" << opt.lemma_trials
      << " degree<=6 coeffs=-20..20 alpha=-50..50 seed=" << opt.lemma_seed;
    add("property/auxiliary-lemma", "", p.str(), [&opt](CheckResult& r) {
      std::mt19937 rng(opt.lemma_seed);
      std::uniform_int_distribution<int> coeff(-20, 20);
      std::uniform_int_distribution<int> degree(0, 6);
      std::uniform_int_distribution<int> center(-20, 20);
      for (int trial = 0; trial < opt.lemma_trials; ++trial) {
        std::vector<Int> f(degree(rng) + 1);
        for (Int& c : f) c = coeff(rng);
        Int c = center(rng);
        CheckReport rep = auxiliary_lemma_check(c, f, -50, 50);
        if (!rep.passed()) {
          fail(r, "trial " + std::to_string(trial) + ": " + rep.witness);
          return;
        }
      }
    });
  }
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const SuiteOptions& options) {
  std::vector<Task> tasks;
  build_tasks(options, tasks);

  if (!options.only.empty()) {
    std::erase_if(tasks, [&](const Task& t) {
      return t.seed.check_name.find(options.only) == std::string::npos;
    });
  }

  std::vector<CheckResult> results(tasks.size());
  auto run_one = [&](size_t i) {
    CheckResult r = tasks[i].seed;
    auto start = std::chrono::steady_clock::now();
    try {
      tasks[i].body(r);
    } catch (const std::exception& e) {
      fail(r, std::string("exception: ") + e.what());
    }
    r.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results[i] = std::move(r);
  };

  int threads = options.parallelism > 0
                    ? options.parallelism
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == ResultStatus::Fail;
  });
}

}  // namespace apery
