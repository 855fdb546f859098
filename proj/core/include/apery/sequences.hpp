#pragma once

// The fifteen sporadic Apéry-like sequences: parameter registry, closed-form
// (binomial sum) evaluation, recurrence evaluation, cross-checking of the two
// routes, and a plain-text term cache.
//
// Second kind sequences satisfy, with u_{-1} = 0 and u_0 = 1,
//   (n+1)^2 u_{n+1} = (A n^2 + A n + lambda) u_n - B n^2 u_{n-1}
// and first kind sequences satisfy
//   (n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - n (c n^2 + d) u_{n-1}.
// Both recurrences divide exactly over the integers for the registered
// parameter tuples; a nonzero remainder is reported as IntegralityViolation.

#include "apery/binomial.hpp"
#include "apery/integer.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apery {

enum class SequenceId {
  A, B, C, D, E, F,                    // second kind
  Delta, Eta, Alpha, Epsilon, Zeta,    // first kind
  Gamma, S7, S10, S18
};

inline constexpr int kSequenceCount = 15;

enum class SequenceKind { SecondKind, FirstKind };

enum class TermSource { Formula, Recurrence, Canonical };

struct SecondKindParams {
  Int A, B, lambda;
};

struct FirstKindParams {
  Int a, b, c, d;
};

struct SequenceSpec {
  SequenceId id;
  SequenceKind kind;
  SecondKindParams second;  // valid iff kind == SecondKind
  FirstKindParams first;    // valid iff kind == FirstKind
  std::string name;         // registry key: "A".."F", "delta", ..., "s18"
  std::vector<std::string> aliases;  // display names, also accepted in lookups
  // Convention the closed form is read in; Generalized for every registered
  // sequence (the convention that reproduces the classical table values).
  BinomialConvention formula_convention = BinomialConvention::Generalized;
  // Normalized first term and transform modulus of the canonical table
  // (the classical values for these sequences).
  Int table_u1;
  Int table_modulus;
  // True when the closed form contains binomials with negative upper
  // argument, making its value depend on the binomial convention (eta, s18).
  bool convention_sensitive = false;

  long recurrence_order() const {
    return kind == SequenceKind::SecondKind ? 2 : 3;
  }
  // u_1 of the recurrence normalization: lambda resp. b.
  const Int& recurrence_u1() const {
    return kind == SequenceKind::SecondKind ? second.lambda : first.b;
  }
};

// All fifteen specs in registry order (second kind A..F, then first kind).
const std::vector<SequenceSpec>& all_specs();
const SequenceSpec& spec_for(SequenceId id);
// Lookup by name or alias; nullptr when unknown.
const SequenceSpec* find_spec(std::string_view name);
std::string_view id_name(SequenceId id);
std::string_view source_name(TermSource s);
std::optional<TermSource> parse_source(std::string_view s);

// Thrown when a recurrence step does not divide exactly: the parameter tuple
// is wrong or the supplied prior terms are corrupted.
class IntegralityViolation : public std::runtime_error {
 public:
  IntegralityViolation(SequenceId id, long index, std::string what)
      : std::runtime_error(std::move(what)), id_(id), index_(index) {}
  SequenceId sequence() const { return id_; }
  long index() const { return index_; }

 private:
  SequenceId id_;
  long index_;
};

struct TermTable {
  SequenceId id;
  TermSource source;
  std::vector<Int> terms;  // terms[n] = u_n, contiguous from n = 0

  long n_max() const { return static_cast<long>(terms.size()) - 1; }
  const SequenceSpec& spec() const { return spec_for(id); }
};

// Closed-form value of u_n.  The sums are normalized to u_0 = 1: for eta and
// s18 the literal k = 0 summand at n = 0 contains C(-1, 0) = 1 and the raw
// generalized-convention sum is 2.
Int term_by_formula(const SequenceSpec& spec, long n, BinomialCache& cache,
                    BinomialConvention conv = BinomialConvention::Generalized);

// Recurrence step: computes u_n given prior = (u_0, ..., u_{n-1}).
// Requires prior.size() == n >= 1.  Throws IntegralityViolation when the
// division by n^2 (second kind) or n^3 (first kind) leaves a remainder.
Int term_by_recurrence(const SequenceSpec& spec, long n,
                       std::span<const Int> prior);

// Whole table 0..n_max by the closed form (shares one binomial cache, and
// reuses the Franel table for F instead of re-summing the inner sum).
TermTable formula_table(const SequenceSpec& spec, long n_max,
                        BinomialConvention conv = BinomialConvention::Generalized);

// Build a table 0..n_max from the requested source.
//
// Canonical is the formula normalization computed the fast way: it equals the
// recurrence table for thirteen sequences and the doubled recurrence table
// (w_0 = 1, w_n = 2 u_n for n >= 1) for eta and s18.  The fast path is used
// only after a one-time per-process prefix cross-check certifies the
// Equal / DoubledFormula relation for the sequence.
TermTable generate(const SequenceSpec& spec, TermSource source, long n_max);

struct CrossCheckReport {
  enum class Status { Equal, DoubledFormula, Mismatch };
  Status status;
  std::optional<long> first_divergence;  // set iff Mismatch
};

// Compares the formula table (generalized convention) against the recurrence
// table on 0..n_max.  DoubledFormula means equal at n = 0 and formula = twice
// the recurrence value for every 1 <= n <= n_max.
CrossCheckReport cross_check(const SequenceSpec& spec, long n_max);

// Term cache: one "name,source,n,decimal_value" line per term, n ascending.
void save_term_cache(const TermTable& table, std::ostream& out);
// Throws std::runtime_error on malformed input, mixed ids/sources,
// non-contiguous indices, or a leading term different from 1.
TermTable load_term_cache(std::istream& in);

}  // namespace apery
