#pragma once

// Binomial transforms of term tables.  For a table (u_n) and integer alpha,
//
//   v_n(alpha) = sum_k C(n, k) (-alpha)^{n-k} u_k,
//
// computed by an in-place difference triangle: with (D f)(k) = f(k+1) -
// alpha f(k), v_n = (D^n u)(0).  This needs O(n^2) subtractions and scalar
// multiplications and no binomial coefficients.  The inverse transform is the
// same triangle run with -alpha.

#include "apery/integer.hpp"
#include "apery/sequences.hpp"

namespace apery {

struct TransformTable {
  SequenceId id;
  TermSource source;
  Int alpha;
  std::vector<Int> values;  // values[n] = v_n(alpha)

  long n_max() const { return static_cast<long>(values.size()) - 1; }
};

// Truncated integer power series sum_j coefficients[j] z^j.
struct SeriesPoly {
  std::vector<Int> coefficients;

  long truncation_order() const {
    return static_cast<long>(coefficients.size()) - 1;
  }
};

// v_0..v_{n_max}; requires table.n_max() >= n_max (throws
// std::invalid_argument on insufficient terms).
TransformTable binomial_transform(const TermTable& table, const Int& alpha,
                                  long n_max);

// Recovers u_0..u_{n_max} from a transform table (triangle at -alpha).
std::vector<Int> inverse_transform(const TransformTable& transformed,
                                   long n_max);

// The series sum u_n z^n truncated at `order`.
SeriesPoly series_of(const TermTable& table, long order);
SeriesPoly series_of(const TransformTable& table, long order);

// Checks the generating function identity
//   sum_n v_n(alpha) z^n = (1 + alpha z)^{-1} F(z / (1 + alpha z)),
// F the series of the table, with both sides expanded exactly to `order`.
bool verify_gf_identity(const TermTable& table, const Int& alpha, long order);
// Same, over the canonical table of the sequence.
bool verify_gf_identity(const SequenceSpec& spec, const Int& alpha, long order);

}  // namespace apery
