#include "apery/theta.hpp"

#include <algorithm>
#include <sstream>

namespace apery {

void ThetaPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ThetaPoly ThetaPoly::constant(Int c) { return ThetaPoly({std::move(c)}); }

ThetaPoly ThetaPoly::monomial(long degree, Int coeff) {
  std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
  c.back() = std::move(coeff);
  return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::linear(Int shift) {
  return ThetaPoly({std::move(shift), Int(1)});
}

Int ThetaPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

Int ThetaPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

ThetaPoly ThetaPoly::shifted(const Int& s) const {
  // Horner in (X + s): acc <- acc * (X + s) + c_i from the top down.
  ThetaPoly acc;
  ThetaPoly xs = ThetaPoly::linear(s);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * xs + ThetaPoly::constant(*it);
  return acc;
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
  return *this + (-o);
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::operator*(const Int& s) const {
  std::vector<Int> c = coeffs_;
  for (Int& x : c) x *= s;
  return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::operator-() const { return *this * Int(-1); }

std::string ThetaPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (leading) {
      if (c < 0) out << "-";
      leading = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

const ThetaPoly* ThetaOperator::coefficient(long z_power) const {
  for (const auto& [j, p] : terms)
    if (j == z_power) return &p;
  return nullptr;
}

std::string ThetaOperator::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, p] : terms) {
    if (!first) out << " + ";
    first = false;
    if (j == 0) {
      out << p.to_string("theta");
    } else {
      out << "z";
      if (j > 1) out << "^" << j;
      out << "*(" << p.to_string("theta") << ")";
    }
  }
  return first ? "0" : out.str();
}

namespace {

ThetaOperator make_operator(std::vector<ThetaPoly> polys) {
  ThetaOperator op;
  for (size_t j = 0; j < polys.size(); ++j)
    if (!polys[j].is_zero() || j == 0)
      op.terms.emplace_back(static_cast<long>(j), std::move(polys[j]));
  return op;
}

ThetaPoly quadratic(const Int& c2, const Int& c1, const Int& c0) {
  return ThetaPoly({c0, c1, c2});
}

}  // namespace

ThetaOperator build_L1(const Int& A, const Int& B, const Int& lambda) {
  ThetaPoly t1 = ThetaPoly::linear(1);  // theta + 1
  return make_operator({
      ThetaPoly::monomial(2),
      -quadratic(A, A, lambda),
      t1 * t1 * B,
  });
}

ThetaOperator build_L2(const Int& a, const Int& b, const Int& c,
                       const Int& d) {
  ThetaPoly t1 = ThetaPoly::linear(1);
  return make_operator({
      ThetaPoly::monomial(3),
      -(ThetaPoly({1, 2}) * quadratic(a, a, b)),  // (2 theta + 1)(...)
      t1 * t1 * t1 * c + t1 * d,
  });
}

ThetaOperator build_transformed_L1(const Int& A, const Int& B,
                                   const Int& lambda, const Int& x) {
  ThetaPoly t1 = ThetaPoly::linear(1);
  ThetaPoly t2 = ThetaPoly::linear(2);
  return make_operator({
      ThetaPoly::monomial(2),
      quadratic(3 * x - A, 3 * x - A, x - lambda),
      t1 * t1 * -(2 * A * x - 3 * x * x - B),
      t1 * t2 * (x * (A * x - x * x - B) * -1),
  });
}

ThetaOperator build_transformed_L2(const Int& a, const Int& b, const Int& c,
                                   const Int& d, const Int& x) {
  ThetaPoly t1 = ThetaPoly::linear(1);
  ThetaPoly t2 = ThetaPoly::linear(2);
  ThetaPoly t3 = ThetaPoly::linear(3);
  Int x2 = x * x;
  ThetaPoly z1 = ThetaPoly({1, 2}) * quadratic(a - 2 * x, a - 2 * x, b - x);
  ThetaPoly z2 = t1 * quadratic(6 * a * x - 6 * x2 - c,
                                12 * a * x - 12 * x2 - 2 * c,
                                6 * a * x + 2 * b * x - 7 * x2 - c - d);
  ThetaPoly z3 =
      t1 * t2 * ThetaPoly({3, 2}) * (x * (3 * a * x - 2 * x2 - c));
  ThetaPoly z4 = t1 * t2 * t3 * (x2 * (2 * a * x - x2 - c));
  return make_operator({ThetaPoly::monomial(3), -z1, -z2, -z3, -z4});
}

ThetaOperator operator_for(const SequenceSpec& spec, const Int& x) {
  if (spec.kind == SequenceKind::SecondKind)
    return build_transformed_L1(spec.second.A, spec.second.B,
                                spec.second.lambda, x);
  return build_transformed_L2(spec.first.a, spec.first.b, spec.first.c,
                              spec.first.d, x);
}

Recurrence operator_to_recurrence(const ThetaOperator& op) {
  Recurrence rec;
  rec.coeff_polys.assign(static_cast<size_t>(op.max_z_power()) + 1,
                         ThetaPoly{});
  for (const auto& [j, p] : op.terms)
    rec.coeff_polys[j] = p.shifted(Int(-j));  // P_j(n - j)
  return rec;
}

std::string Recurrence::to_string() const {
  std::ostringstream out;
  for (long j = 0; j <= order(); ++j) {
    const ThetaPoly& p = coeff_polys[j];
    if (j > 0) out << " + ";
    bool monic_monomial =
        !p.is_zero() && p.coeff(p.degree()) == 1 &&
        std::all_of(p.coefficients().begin(), p.coefficients().end() - 1,
                    [](const Int& c) { return c == 0; });
    if (monic_monomial)
      out << p.to_string("n");
    else
      out << "(" << p.to_string("n") << ")";
    out << "*v[n";
    if (j > 0) out << "-" << j;
    out << "]";
  }
  out << " = 0";
  return out.str();
}

AnnihilationReport check_annihilates(const ThetaOperator& op,
                                     const SeriesPoly& series) {
  long order = series.truncation_order();
  long zmax = op.max_z_power();
  if (order < zmax)
    throw std::invalid_argument(
        "check_annihilates: series shorter than operator width");
  Recurrence rec = operator_to_recurrence(op);
  for (long n = zmax; n <= order; ++n) {
    Int residual = 0;
    for (long j = 0; j <= rec.order(); ++j) {
      if (n - j < 0) break;
      residual += rec.coeff_polys[j].eval(n) * series.coefficients[n - j];
    }
    if (residual != 0) return {false, n};
  }
  return {true, std::nullopt};
}

}  // namespace apery
