#include "apery/transforms.hpp"

namespace apery {

namespace {

// Shared triangle: out[n] = (D^n f)(0) with (D f)(k) = f(k+1) - alpha f(k).
std::vector<Int> difference_triangle(std::span<const Int> input,
                                     const Int& alpha, long n_max) {
  if (static_cast<long>(input.size()) <= n_max)
    throw std::invalid_argument(
        "binomial transform: insufficient terms for requested order");
  std::vector<Int> row(input.begin(), input.begin() + (n_max + 1));
  std::vector<Int> out;
  out.reserve(n_max + 1);
  out.push_back(row[0]);
  Int tmp;
  for (long j = 1; j <= n_max; ++j) {
    for (long k = 0; k <= n_max - j; ++k) {
      mpz_mul(tmp.get_mpz_t(), alpha.get_mpz_t(), row[k].get_mpz_t());
      mpz_sub(row[k].get_mpz_t(), row[k + 1].get_mpz_t(), tmp.get_mpz_t());
    }
    out.push_back(row[0]);
  }
  return out;
}

}  // namespace

TransformTable binomial_transform(const TermTable& table, const Int& alpha,
                                  long n_max) {
  return {table.id, table.source, alpha,
          difference_triangle(table.terms, alpha, n_max)};
}

std::vector<Int> inverse_transform(const TransformTable& transformed,
                                   long n_max) {
  return difference_triangle(transformed.values, -transformed.alpha, n_max);
}

SeriesPoly series_of(const TermTable& table, long order) {
  if (table.n_max() < order)
    throw std::invalid_argument("series_of: insufficient terms");
  return {{table.terms.begin(), table.terms.begin() + (order + 1)}};
}

SeriesPoly series_of(const TransformTable& table, long order) {
  if (table.n_max() < order)
    throw std::invalid_argument("series_of: insufficient terms");
  return {{table.values.begin(), table.values.begin() + (order + 1)}};
}

bool verify_gf_identity(const TermTable& table, const Int& alpha, long order) {
  // Left side: the transform coefficients themselves.
  TransformTable lhs = binomial_transform(table, alpha, order);

  // Right side: (1 + alpha z)^{-1} F(z / (1 + alpha z))
  //   = sum_k u_k z^k (1 + alpha z)^{-k-1}
  //   = sum_k u_k z^k sum_m C(k+m, m) (-alpha)^m z^m.
  std::vector<Int> pow_neg(order + 1);
  pow_neg[0] = 1;
  for (long m = 1; m <= order; ++m) pow_neg[m] = pow_neg[m - 1] * -alpha;
  BinomialCache bc;
  std::vector<Int> rhs(order + 1, Int(0));
  for (long k = 0; k <= order; ++k)
    for (long m = 0; k + m <= order; ++m)
      rhs[k + m] += table.terms[k] * bc.get(k + m, m) * pow_neg[m];

  return lhs.values == rhs;
}

bool verify_gf_identity(const SequenceSpec& spec, const Int& alpha,
                        long order) {
  return verify_gf_identity(generate(spec, TermSource::Canonical, order),
                            alpha, order);
}

}  // namespace apery
