#pragma once

// Binomial coefficients in the generalized (falling-factorial) convention:
//
//   C(m, r) = m (m-1) ... (m-r+1) / r!   for r >= 0,   C(m, r) = 0 for r < 0.
//
// This keeps the upper argument unrestricted; for negative m the upper
// negation identity C(m, r) = (-1)^r C(r - m - 1, r) holds.  A second
// convention that sends every negative upper argument to 0 is provided for
// closed forms that are stated over the natural range only.

#include "apery/integer.hpp"

#include <vector>

namespace apery {

enum class BinomialConvention {
  Generalized,       // falling-factorial definition, negative m allowed
  ZeroOnNegativeTop  // C(m, r) = 0 whenever m < 0
};

// Single coefficient in the generalized convention.
Int binom(const Int& m, const Int& r);

// Single coefficient with negative upper arguments mapped to 0.
Int binom_zero_neg(const Int& m, const Int& r);

Int binom_conv(const Int& m, const Int& r, BinomialConvention conv);

// Pascal-triangle cache for the bulk evaluations done by the closed forms.
// Rows are built once by addition and reused; negative upper arguments are
// served through the upper negation identity.  Row growth is amortized and
// the cache is not thread safe; use one cache per thread.
class BinomialCache {
 public:
  BinomialCache() = default;

  // C(m, r) under the requested convention.
  const Int& get(long m, long r,
                 BinomialConvention conv = BinomialConvention::Generalized);

  long rows_built() const { return static_cast<long>(rows_.size()); }

 private:
  void ensure_row(long m);
  std::vector<std::vector<Int>> rows_;
  Int zero_ = 0;
  Int scratch_;
};

}  // namespace apery
