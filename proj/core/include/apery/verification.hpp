#pragma once

// The full verification suite as a flat list of named checks with stable
// ordering, used by the command line front end.  Every check is a pure
// computation; independent checks can be fanned out across a worker pool
// without affecting the order of the collected records.

#include "apery/sequences.hpp"

#include <string>
#include <vector>

namespace apery {

enum class ResultStatus { Pass, Fail, Note };
std::string_view result_status_name(ResultStatus s);

struct CheckResult {
  std::string check_name;
  std::string sequence;  // empty for checks that are not per-sequence
  std::string params;
  ResultStatus status = ResultStatus::Pass;
  std::string witness;  // counterexample on Fail, measurement notes on Note
  double duration_seconds = 0.0;
};

struct SuiteOptions {
  // Table normalization used for eta and s18 in the certificate checks
  // (Canonical = the table-matching doubled normalization).
  TermSource eta_normalization = TermSource::Canonical;
  // Substring filter on check names; empty runs everything.
  std::string only;
  // Worker threads; 0 means hardware concurrency.
  int parallelism = 0;

  // Scales; the defaults are the full advertised sweep sizes.
  long motivating_n_max = 2000;
  long theorem1_alpha_lo = -10, theorem1_alpha_hi = 10;
  long theorem1_n_max = 500;
  long theorem2_n_max = 200;
  long theorem2_alpha_lo = -25, theorem2_alpha_hi = 25;
  long gauss_n_max = 1500;
  long annihilation_order = 400;
  long gf_order = 64;
  long special_n_max = 1000;
  long steps_n_max = 1000;
  long steps_doubling_max = 200;
  long steps_binom_max = 200;
  long cross_check_n_max = 300;
  long cross_check_sensitive_n_max = 200;
  long property_negation_bound = 60;
  long roundtrip_n_max = 100;
  long equivalence_n_max = 200;
  unsigned lemma_seed = 20240817;
  int lemma_trials = 40;
};

// Runs the suite (or the filtered subset) and returns one record per check in
// deterministic order: registry order of the sequences, ascending alpha.
std::vector<CheckResult> run_verification_suite(const SuiteOptions& options);

// True iff no record has status Fail (Note records never fail a run).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace apery
