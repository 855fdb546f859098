#include "apery/theta.hpp"

#include "apery/sequences.hpp"
#include "apery/transforms.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace apery {
namespace {

ThetaOperator untransformed(const SequenceSpec& spec) {
  if (spec.kind == SequenceKind::SecondKind)
    return build_L1(spec.second.A, spec.second.B, spec.second.lambda);
  return build_L2(spec.first.a, spec.first.b, spec.first.c, spec.first.d);
}

TEST(ThetaPoly, Basics) {
  ThetaPoly p({3, 0, 1});  // X^2 + 3
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_EQ(p.coeff(1), 0);
  EXPECT_EQ(p.coeff(2), 1);
  EXPECT_EQ(p.coeff(5), 0);
  EXPECT_EQ(p.coeff(-1), 0);
  EXPECT_EQ(p.eval(2), 7);
  EXPECT_EQ(p.eval(-2), 7);
  EXPECT_FALSE(p.is_zero());

  ThetaPoly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_EQ(zero.eval(10), 0);

  ThetaPoly trimmed({1, 2, 0, 0});
  EXPECT_EQ(trimmed.degree(), 1);
}

TEST(ThetaPoly, Factories) {
  EXPECT_EQ(ThetaPoly::constant(5), ThetaPoly({5}));
  EXPECT_EQ(ThetaPoly::constant(0), ThetaPoly());
  EXPECT_EQ(ThetaPoly::monomial(2), ThetaPoly({0, 0, 1}));
  EXPECT_EQ(ThetaPoly::monomial(1, -3), ThetaPoly({0, -3}));
  EXPECT_EQ(ThetaPoly::linear(4), ThetaPoly({4, 1}));
}

TEST(ThetaPoly, Arithmetic) {
  ThetaPoly t1 = ThetaPoly::linear(1);
  ThetaPoly t2 = ThetaPoly::linear(2);
  EXPECT_EQ(t1 * t2, ThetaPoly({2, 3, 1}));  // (X+1)(X+2)
  EXPECT_EQ(t1 + t2, ThetaPoly({3, 2}));
  EXPECT_EQ(t1 - t1, ThetaPoly());
  EXPECT_EQ(-t1, ThetaPoly({-1, -1}));
  EXPECT_EQ(t1 * Int(3), ThetaPoly({3, 3}));
  EXPECT_EQ(t1 * Int(0), ThetaPoly());
  // cancellation of the top coefficient normalizes the degree
  EXPECT_EQ((ThetaPoly({0, 0, 1}) - ThetaPoly({1, 0, 1})).degree(), 0);
}

TEST(ThetaPoly, Shifted) {
  ThetaPoly sq = ThetaPoly::monomial(2);
  EXPECT_EQ(sq.shifted(-1), ThetaPoly({1, -2, 1}));  // (X-1)^2
  EXPECT_EQ(sq.shifted(0), sq);
  ThetaPoly p({2, 3, 1});  // (X+1)(X+2)
  EXPECT_EQ(p.shifted(-2), ThetaPoly({0, -1, 1}));  // (X-1)X
  // shifting back and forth is the identity
  EXPECT_EQ(p.shifted(5).shifted(-5), p);
  for (long x = -4; x <= 4; ++x)
    EXPECT_EQ(p.shifted(3).eval(x), p.eval(Int(x) + 3));
}

TEST(ThetaPoly, ToString) {
  EXPECT_EQ(ThetaPoly().to_string("n"), "0");
  EXPECT_EQ(ThetaPoly::constant(5).to_string("n"), "5");
  EXPECT_EQ(ThetaPoly::constant(-5).to_string("n"), "-5");
  EXPECT_EQ(ThetaPoly::monomial(2).to_string("theta"), "theta^2");
  EXPECT_EQ(ThetaPoly({0, -1}).to_string("n"), "-n");
  EXPECT_EQ(ThetaPoly({3, 1}).to_string("n"), "n + 3");
  EXPECT_EQ(ThetaPoly({-40, 80, -40}).to_string("n"), "-40*n^2 + 80*n - 40");
  EXPECT_EQ(ThetaPoly({0, 2, 0, 1}).to_string("n"), "n^3 + 2*n");
}

TEST(Operator, BuildL1) {
  ThetaOperator op = build_L1(11, -1, 3);
  ASSERT_EQ(op.terms.size(), 3u);
  EXPECT_EQ(op.terms[0].first, 0);
  EXPECT_EQ(op.terms[0].second, ThetaPoly::monomial(2));
  EXPECT_EQ(op.terms[1].second, ThetaPoly({-3, -11, -11}));
  EXPECT_EQ(op.terms[2].second, ThetaPoly({-1, -2, -1}));  // -(theta+1)^2
  EXPECT_EQ(op.max_z_power(), 2);
  ASSERT_NE(op.coefficient(0), nullptr);
  EXPECT_EQ(*op.coefficient(0), ThetaPoly::monomial(2));
  EXPECT_EQ(op.coefficient(5), nullptr);
  EXPECT_EQ(op.to_string(),
            "theta^2 + z*(-11*theta^2 - 11*theta - 3) + "
            "z^2*(-theta^2 - 2*theta - 1)");
}

TEST(Operator, BuildL1Degenerate) {
  ThetaOperator op = build_L1(0, 0, 0);
  ASSERT_EQ(op.terms.size(), 1u);
  EXPECT_EQ(op.terms[0].second, ThetaPoly::monomial(2));
  EXPECT_EQ(op.to_string(), "theta^2");
}

TEST(Operator, BuildL2) {
  ThetaOperator op = build_L2(17, 5, 1, 0);
  ASSERT_EQ(op.terms.size(), 3u);
  EXPECT_EQ(op.terms[0].second, ThetaPoly::monomial(3));
  // -(2 theta + 1)(17 theta^2 + 17 theta + 5)
  EXPECT_EQ(op.terms[1].second,
            -(ThetaPoly({1, 2}) * ThetaPoly({5, 17, 17})));
  // (theta+1)^3
  EXPECT_EQ(op.terms[2].second, ThetaPoly({1, 3, 3, 1}));
}

TEST(Operator, TransformedReducesAtXZero) {
  for (const auto& spec : all_specs())
    EXPECT_EQ(operator_for(spec, 0), untransformed(spec)) << spec.name;
  EXPECT_EQ(build_transformed_L1(0, 0, 0, 0), build_L1(0, 0, 0));
}

TEST(Operator, TransformedDegreeBounds) {
  for (const auto& spec : all_specs()) {
    long bound = spec.kind == SequenceKind::SecondKind ? 2 : 3;
    long width = spec.kind == SequenceKind::SecondKind ? 3 : 4;
    for (long a = -6; a <= 6; ++a) {
      ThetaOperator op = operator_for(spec, Int(a));
      EXPECT_LE(op.max_z_power(), width) << spec.name << " alpha = " << a;
      for (const auto& [j, p] : op.terms)
        EXPECT_LE(p.degree(), bound) << spec.name << " alpha = " << a
                                     << " z^" << j;
    }
  }
}

TEST(Recurrence, WorkedExample) {
  const SequenceSpec& d = spec_for(SequenceId::D);
  Recurrence rec = operator_to_recurrence(operator_for(d, 3));
  ASSERT_EQ(rec.order(), 3);
  EXPECT_EQ(rec.coeff_polys[0], ThetaPoly::monomial(2));
  EXPECT_EQ(rec.coeff_polys[1], ThetaPoly({0, 2, -2}));   // -2n(n-1)
  EXPECT_EQ(rec.coeff_polys[2], ThetaPoly({-40, 80, -40}));  // -40(n-1)^2
  EXPECT_EQ(rec.coeff_polys[3], ThetaPoly({-150, 225, -75}));  // -75(n-1)(n-2)
  EXPECT_EQ(rec.coeff_polys[0].eval(4), 16);
  EXPECT_EQ(rec.coeff_polys[1].eval(4), -24);
  EXPECT_EQ(rec.coeff_polys[2].eval(4), -360);
  EXPECT_EQ(rec.coeff_polys[3].eval(4), -450);

  // v(3) = (1, 0, 10, 30, 270) satisfies the n = 4 instance.
  TermTable t = generate(d, TermSource::Canonical, 4);
  std::vector<Int> v = binomial_transform(t, 3, 4).values;
  ASSERT_EQ(v, (std::vector<Int>{1, 0, 10, 30, 270}));
  Int residual = 0;
  for (long j = 0; j <= 3; ++j)
    residual += rec.coeff_polys[j].eval(4) * v[4 - j];
  EXPECT_EQ(residual, 0);
  EXPECT_EQ(Int(16) * 270, Int(24) * 30 + Int(360) * 10);

  EXPECT_EQ(rec.to_string(),
            "n^2*v[n] + (-2*n^2 + 2*n)*v[n-1] + (-40*n^2 + 80*n - 40)*v[n-2]"
            " + (-75*n^2 + 225*n - 150)*v[n-3] = 0");
}

TEST(Recurrence, GapsFilledWithZeroPolynomials) {
  ThetaOperator op;
  op.terms.emplace_back(0, ThetaPoly::monomial(1));
  op.terms.emplace_back(2, ThetaPoly::constant(1));
  Recurrence rec = operator_to_recurrence(op);
  ASSERT_EQ(rec.order(), 2);
  EXPECT_TRUE(rec.coeff_polys[1].is_zero());
  EXPECT_EQ(rec.coeff_polys[2], ThetaPoly::constant(1));
}

TEST(Recurrence, FiveTermForFirstKindTransforms) {
  Recurrence rec =
      operator_to_recurrence(operator_for(spec_for(SequenceId::Gamma), 5));
  EXPECT_EQ(rec.order(), 4);  // five-term recurrence
  EXPECT_EQ(rec.coeff_polys[0], ThetaPoly::monomial(3));
}

TEST(Annihilation, UntransformedOperatorsOnRecurrenceTables) {
  for (const auto& spec : all_specs()) {
    TermTable t = generate(spec, TermSource::Recurrence, 48);
    AnnihilationReport rep =
        check_annihilates(untransformed(spec), series_of(t, 48));
    EXPECT_TRUE(rep.ok) << spec.name << " residual at "
                        << rep.first_bad_index.value_or(-1);
  }
}

TEST(Annihilation, TransformedOperatorsOnTransformSeries) {
  for (const auto& spec : all_specs()) {
    TermTable t = generate(spec, TermSource::Recurrence, 48);
    const Int& u1 = spec.recurrence_u1();
    for (const Int& alpha : {Int(0), Int(1), Int(u1), Int(u1 + 6)}) {
      TransformTable v = binomial_transform(t, alpha, 48);
      AnnihilationReport rep =
          check_annihilates(operator_for(spec, alpha), series_of(v, 48));
      EXPECT_TRUE(rep.ok) << spec.name << " alpha = " << alpha
                          << " residual at "
                          << rep.first_bad_index.value_or(-1);
    }
  }
}

TEST(Annihilation, WrongOperatorIsDetected) {
  const SequenceSpec& d = spec_for(SequenceId::D);
  TermTable t = generate(d, TermSource::Canonical, 20);
  TransformTable v = binomial_transform(t, 3, 20);
  // The untransformed operator does not annihilate the alpha = 3 transform.
  AnnihilationReport rep =
      check_annihilates(untransformed(d), series_of(v, 20));
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.first_bad_index.has_value());
  EXPECT_EQ(*rep.first_bad_index, 2);

  // An operator for a different sequence fails too.
  AnnihilationReport cross = check_annihilates(
      operator_for(spec_for(SequenceId::A), 3), series_of(v, 20));
  EXPECT_FALSE(cross.ok);
}

TEST(Annihilation, CanonicalDoubledTablesAreNotAnnihilated) {
  // The doubled eta/s18 normalization breaks the operator relation (the
  // constant term is not doubled); the recurrence normalization satisfies it.
  for (SequenceId id : {SequenceId::Eta, SequenceId::S18}) {
    const SequenceSpec& spec = spec_for(id);
    TermTable canonical = generate(spec, TermSource::Canonical, 30);
    AnnihilationReport rep = check_annihilates(
        operator_for(spec, 0), series_of(canonical, 30));
    EXPECT_FALSE(rep.ok) << spec.name;
    EXPECT_EQ(*rep.first_bad_index, 2) << spec.name;
  }
}

TEST(Annihilation, SeriesShorterThanOperatorThrows) {
  const SequenceSpec& d = spec_for(SequenceId::D);
  TermTable t = generate(d, TermSource::Canonical, 2);
  // transformed second-kind operator has z-width 3
  EXPECT_THROW(check_annihilates(operator_for(d, 3), series_of(t, 2)),
               std::invalid_argument);
}

}  // namespace
}  // namespace apery
