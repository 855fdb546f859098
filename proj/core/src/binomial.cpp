#include "apery/binomial.hpp"

#include <limits>

namespace apery {

Int binom(const Int& m, const Int& r) {
  if (r < 0) return 0;
  if (!r.fits_ulong_p())
    throw std::domain_error("binom: lower argument too large");
  Int out;
  // mpz_bin_ui implements the falling-factorial definition for any sign of m.
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), r.get_ui());
  return out;
}

Int binom_zero_neg(const Int& m, const Int& r) {
  if (m < 0) return 0;
  return binom(m, r);
}

Int binom_conv(const Int& m, const Int& r, BinomialConvention conv) {
  return conv == BinomialConvention::Generalized ? binom(m, r)
                                                 : binom_zero_neg(m, r);
}

void BinomialCache::ensure_row(long m) {
  while (rows_built() <= m) {
    long n = rows_built();
    std::vector<Int> row(static_cast<size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (long k = 1; k < n; ++k)
      row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    rows_.push_back(std::move(row));
  }
}

const Int& BinomialCache::get(long m, long r, BinomialConvention conv) {
  if (r < 0) return zero_;
  if (m < 0) {
    if (conv == BinomialConvention::ZeroOnNegativeTop) return zero_;
    // Upper negation: C(m, r) = (-1)^r C(r - m - 1, r).  The returned
    // reference lives in a scratch slot and is invalidated by the next call.
    const Int& flipped = get(r - m - 1, r, conv);
    if (r % 2 == 0) return flipped;
    scratch_ = -flipped;
    return scratch_;
  }
  if (r > m) return zero_;
  ensure_row(m);
  return rows_[m][r];
}

}  // namespace apery
