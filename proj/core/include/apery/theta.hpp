#pragma once

// Differential operators in the Euler operator theta = z d/dz, written as
//   L = sum_j z^j P_j(theta)
// with integer polynomial coefficients P_j, together with their contiguous
// recurrences.  Applying z^j P_j(theta) to sum_n v_n z^n contributes
// P_j(n - j) v_{n-j} to the z^n coefficient, so L annihilates the series iff
//   sum_j P_j(n - j) v_{n-j} = 0  for all n  (v_m = 0 for m < 0).

#include "apery/integer.hpp"
#include "apery/sequences.hpp"
#include "apery/transforms.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace apery {

// Dense integer polynomial, constant coefficient first, no trailing zeros.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  explicit ThetaPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  static ThetaPoly constant(Int c);
  static ThetaPoly monomial(long degree, Int coeff = 1);
  // X + s, handy for building products like (theta + 1)(theta + 2).
  static ThetaPoly linear(Int shift);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(long i) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int eval(const Int& x) const;
  // P(X + s) by Horner expansion.
  ThetaPoly shifted(const Int& s) const;

  ThetaPoly operator+(const ThetaPoly& o) const;
  ThetaPoly operator-(const ThetaPoly& o) const;
  ThetaPoly operator*(const ThetaPoly& o) const;
  ThetaPoly operator*(const Int& s) const;
  ThetaPoly operator-() const;
  bool operator==(const ThetaPoly& o) const = default;

  // Canonical rendering, highest degree first: "-40*n^2 + 80*n - 40".
  std::string to_string(std::string_view var) const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// Normalized operator: z-powers strictly increasing starting at 0, zero
// coefficient polynomials dropped (P_0 is always present for the operators
// built here).
struct ThetaOperator {
  std::vector<std::pair<long, ThetaPoly>> terms;

  long max_z_power() const {
    return terms.empty() ? 0 : terms.back().first;
  }
  const ThetaPoly* coefficient(long z_power) const;
  bool operator==(const ThetaOperator& o) const = default;

  std::string to_string() const;  // "theta^2 + z*(...) + z^2*(...)"
};

// theta^2 - y (A theta^2 + A theta + lambda) + B y^2 (theta+1)^2
ThetaOperator build_L1(const Int& A, const Int& B, const Int& lambda);
// theta^3 - y (2 theta + 1)(a theta^2 + a theta + b)
//         + y^2 (c (theta+1)^3 + d (theta+1))
ThetaOperator build_L2(const Int& a, const Int& b, const Int& c, const Int& d);

// Operators annihilating sum_n v_n(x) z^n; both reduce termwise to the
// untransformed operators at x = 0.
ThetaOperator build_transformed_L1(const Int& A, const Int& B,
                                   const Int& lambda, const Int& x);
ThetaOperator build_transformed_L2(const Int& a, const Int& b, const Int& c,
                                   const Int& d, const Int& x);

// Transformed operator of the sequence's kind with its parameters and x.
ThetaOperator operator_for(const SequenceSpec& spec, const Int& x);

// sum_j coeff_polys[j](n) * v_{n-j} = 0; coeff_polys[0](n) is n^2 or n^3 for
// the operators built here.
struct Recurrence {
  std::vector<ThetaPoly> coeff_polys;

  long order() const { return static_cast<long>(coeff_polys.size()) - 1; }
  // Canonical text: "n^2*v[n] + (-2*n^2 + 2*n)*v[n-1] + ... = 0".
  std::string to_string() const;
};

Recurrence operator_to_recurrence(const ThetaOperator& op);

struct AnnihilationReport {
  bool ok = false;
  std::optional<long> first_bad_index;
};

// Applies the recurrence form of op to the series coefficients; ok iff every
// residual for max_z_power <= n <= truncation order is exactly zero.
// Requires series order >= max z-power.
AnnihilationReport check_annihilates(const ThetaOperator& op,
                                     const SeriesPoly& series);

}  // namespace apery
