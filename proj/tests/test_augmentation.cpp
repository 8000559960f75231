/**
 * Copyright 2026 The hrlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "hrlab/augmentation.hpp"

using namespace hrlab;

namespace {

const std::vector<Rational> kSmallT = {Rational(0), Rational(1, 100), Rational(-1, 100)};

AugmentationModel model(int d, int e, const char* lambda, std::uint64_t seed) {
  return {AugmentedSpace::random(d, e, seed), Partition::parse(lambda)};
}

}  // namespace

TEST(AugmentedSpace, Validation) {
  Form id = hermitian_to_form(HermitianMatrix::identity(3));
  Form indefinite = hermitian_to_form(HermitianMatrix::diagonal({Rational(1), Rational(-1), Rational(1)}));
  EXPECT_NO_THROW(AugmentedSpace(3, {id}, id));
  EXPECT_THROW(AugmentedSpace(3, {indefinite}, id), std::invalid_argument);
  EXPECT_THROW(AugmentedSpace(3, {id}, indefinite), std::invalid_argument);
  EXPECT_THROW(AugmentedSpace(3, {}, id), std::invalid_argument);
  EXPECT_THROW(AugmentedSpace(4, {id}, id), std::invalid_argument);
  AugmentedSpace s(3, {id}, id);
  EXPECT_EQ(s.v_dim(), 10u);
  EXPECT_EQ(s.zeta_index(), 9u);
  EXPECT_EQ(s.h_vector().back(), 0);
}

TEST(AugmentationModel, RequiresWeightDMinusTwo) {
  EXPECT_THROW(model(4, 2, "1", 1), std::invalid_argument);
}

TEST(BuildQi, OutOfRangeIsZero) {
  auto m = model(3, 2, "1", 2);
  EXPECT_TRUE(m.q(-1).matrix().is_zero());
  EXPECT_TRUE(m.q(4).matrix().is_zero());
  EXPECT_TRUE(m.q_product(-1).matrix().is_zero());
  EXPECT_TRUE(m.q_product(4).matrix().is_zero());
}

TEST(BuildQi, TopIndexOnWIsIntersectionForm) {
  for (int d = 3; d <= 4; ++d) {
    auto m = model(d, 2, d == 3 ? "1" : "2", 3);
    SymBilinearForm w = restrict_to_w(m.q(d), m.space().zeta_index());
    EXPECT_EQ(w.matrix(), gram(schur(m.lambda(), m.space().omega())).matrix());
  }
}

TEST(BuildQi, MinkowskiAtDimensionTwo) {
  auto m = model(2, 1, "", 4);
  EXPECT_EQ(restrict_to_w(m.q(2), m.space().zeta_index()).matrix(), gram(Form::one(2)).matrix());
}

TEST(BuildQi, CoordinateFormulaMatchesProductExpansion) {
  for (auto [d, e, lam] : {std::tuple{3, 1, "1"}, std::tuple{4, 2, "2"}, std::tuple{4, 2, "1,1"}}) {
    auto m = model(d, e, lam, 5);
    for (int i = 0; i <= d; ++i) EXPECT_EQ(m.q(i).matrix(), m.q_product(i).matrix()) << "d=" << d << " i=" << i;
  }
}

TEST(BuildQi, ZetaPowersAboveDTruncate) {
  using T = PolyOver<Form>;
  const int d = 3;
  T z = T::variable(Form::one(d), d);
  EXPECT_TRUE(ring_power(z, d + 1).coefficient(d + 1).is_zero());
  EXPECT_EQ(ring_power(z, d).coefficient(d), Form::one(d));
}

// Q_i(b, zeta) = Q_{i+1}(b, h) for every basis vector b and every i.
TEST(Identities, ZetaShiftsIndex) {
  auto m = model(4, 2, "1,1", 6);
  Vector h = m.space().h_vector();
  const std::size_t z = m.space().zeta_index();
  for (int i = -1; i <= 4; ++i) {
    Vector lhs = m.q(i).matrix() * unit_vector(h.size(), z);
    Vector rhs = m.q(i + 1).matrix() * h;
    EXPECT_EQ(lhs, rhs) << "i=" << i;
  }
}

TEST(Identities, LinearAndSquareInZeta) {
  auto m = model(4, 2, "2", 7);
  Vector h = m.space().h_vector();
  Vector zeta = m.space().zeta_vector();
  Rng rng(8);
  for (int i = 0; i <= 4; ++i)
    for (int t = 0; t < 5; ++t) {
      Rational lam = rng.small_fraction(7);
      Vector a = coordinates_11(hermitian_to_form(random_hermitian(4, rng)));
      a.push_back(Rational(0));
      Vector v = a;
      v.back() = lam;
      EXPECT_EQ(m.q(i).value(v, h), m.q(i).value(a, h) + lam * m.q(i + 1).value(h));
      EXPECT_EQ(m.q(i).value(v), m.q(i).value(a) + 2 * lam * m.q(i + 1).value(a, h) + lam * lam * m.q(i + 2).value(h));
      (void)zeta;
    }
}

TEST(BuildR, CoefficientsAndDerivatives) {
  const int d = 4;
  auto m = model(d, 2, "2", 9);
  FormFamily r0 = m.r(0);
  EXPECT_EQ(r0.coefficients().size(), 1u);
  EXPECT_EQ(r0.eval(Rational(5)).matrix(), m.q(0).matrix());
  for (int i = 1; i <= d; ++i) {
    FormFamily r = m.r(i);
    EXPECT_EQ(r.eval(0).matrix(), m.q(i).matrix());
    EXPECT_EQ(r.coefficients()[1].matrix(), m.q(i - 1).matrix() * Rational(d - i + 1));
    EXPECT_EQ(r.derivative(), m.r(i - 1).scaled(Rational(d - i + 1)));
    if (i >= 2) EXPECT_EQ(r.derivative().derivative(), m.r(i - 2).scaled(Rational((d - i + 2) * (d - i + 1))));
  }
  EXPECT_TRUE(m.r(-1).eval(0).matrix().is_zero());
  EXPECT_TRUE(m.r(d + 1).eval(0).matrix().is_zero());
}

TEST(FormFamily, EvalAndDerivative) {
  FormFamily f = remark_family(3);
  EXPECT_EQ(family_eval(f, 0).matrix(), f.coefficients()[0].matrix());
  FormFamily c({f.coefficients()[0]});
  EXPECT_TRUE(family_derivative(c).eval(0).matrix().is_zero());
  EXPECT_EQ(f.eval(Rational(1, 3)).matrix(), f.coefficients()[0].matrix() + f.coefficients()[1].matrix() * Rational(1, 3));
}

TEST(PropertyA, InteriorIndexPassesWithExpectedConstant) {
  const int d = 4;
  auto m = model(d, 1, "1,1", 10);
  PropertyAReport a = check_property_A(m.r(3), m.space().h_vector(), m.space().zeta_index(), kSmallT);
  EXPECT_TRUE(a.all());
  ASSERT_TRUE(a.a4_constant.has_value());
  EXPECT_EQ(*a.a4_constant, d - 3 + 1);
  EXPECT_EQ(a.a2_radius, Rational(1, 100));
}

TEST(PropertyA, FailsA5AtTopIndex) {
  auto m = model(4, 1, "1,1", 11);
  PropertyAReport a = check_property_A(m.r(4), m.space().h_vector(), m.space().zeta_index(), kSmallT);
  EXPECT_FALSE(a.a5);
  EXPECT_EQ(a.r0_zeta_h, 0);
  EXPECT_TRUE(a.a1 && a.a2 && a.a3 && a.a4);
}

// R'_{2,0}(h) = (d-1) Q_1(h) vanishes identically.
TEST(PropertyA, DerivativeClauseVanishesAtIndexTwo) {
  auto m = model(4, 2, "1,1", 12);
  PropertyAReport a = check_property_A(m.r(2), m.space().h_vector(), m.space().zeta_index(), kSmallT);
  EXPECT_EQ(a.rp0_h, 0);
  EXPECT_FALSE(a.a1);
  EXPECT_TRUE(sgn(a.r0_h) > 0 && a.a2 && a.a3 && a.a4 && a.a5);
}

TEST(PropertyA, ZeroFamilyFailsA1) {
  FormFamily z = FormFamily::zero(4, "x");
  PropertyAReport a = check_property_A(z, unit_vector(4, 0), 3, kSmallT);
  EXPECT_FALSE(a.a1);
  EXPECT_FALSE(a.a4_constant.has_value());
}

TEST(PropertyB, TopIndexPasses) {
  const int d = 4;
  auto m = model(d, 2, "2", 13);
  PropertyBReport b = check_property_B(m.r(d), m.space().h_vector(), m.space().zeta_index(), default_t_samples());
  EXPECT_TRUE(b.all());
  Vector h = m.space().h_vector();
  Vector z = m.space().zeta_vector();
  EXPECT_EQ(m.q(d - 1).value(z, h), m.q(d).value(h));
}

TEST(PropertyB, ZeroFamilyFailsB1) {
  PropertyBReport b = check_property_B(FormFamily::zero(4, "x"), unit_vector(4, 0), 3, kSmallT);
  EXPECT_FALSE(b.b1);
}

TEST(Augmentation1, ConsistentOnInteriorIndex) {
  auto m = model(4, 2, "2", 14);
  Augmentation1Report r = verify_augmentation1(m.r(3), m.space().h_vector(), m.space().zeta_index(), kSmallT);
  EXPECT_EQ(r.theorem.verdict, Verdict::kConsistent);
  EXPECT_TRUE(r.theorem.hypotheses_hold());
  EXPECT_TRUE(r.theorem.conclusions_hold());
}

TEST(Augmentation1, NotApplicableWhenA1Fails) {
  auto m = model(4, 2, "2", 15);
  Augmentation1Report r = verify_augmentation1(m.r(2), m.space().h_vector(), m.space().zeta_index(), kSmallT);
  EXPECT_EQ(r.theorem.verdict, Verdict::kNotApplicable);
}

TEST(Augmentation1, EmbeddedRemarkFamilyIsNotApplicable) {
  FormFamily f = remark_family(3);
  std::vector<SymBilinearForm> emb;
  for (const auto& q : f.coefficients()) {
    Matrix g(4, 4);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) g(a, b) = q(a, b);
    emb.emplace_back(g, "R^3+zeta");
  }
  Augmentation1Report r = verify_augmentation1(FormFamily(emb), unit_vector(4, 0), 3, kSmallT);
  EXPECT_EQ(r.theorem.verdict, Verdict::kNotApplicable);
  EXPECT_FALSE(r.property_a.a5);
}

TEST(Verdict, InconsistencyIsDetected) {
  TheoremReport t;
  t.hypotheses = {{"h", true}};
  t.conclusions = {{"c", false}};
  t.settle();
  EXPECT_EQ(t.verdict, Verdict::kInconsistent);
  t.hypotheses = {{"h", false}};
  t.settle();
  EXPECT_EQ(t.verdict, Verdict::kNotApplicable);
}

TEST(Recursion, AllHypothesesAndConclusions) {
  auto m = model(4, 2, "1,1", 16);
  RecursionReport r = verify_recursion(m, 3, kSmallT);
  EXPECT_EQ(r.theorem.verdict, Verdict::kConsistent);
  EXPECT_TRUE(r.theorem.hypotheses_hold());
  EXPECT_TRUE(r.theorem.conclusions_hold());
  EXPECT_TRUE(restrict_to_w(m.r(1).eval(0), m.space().zeta_index()).matrix().is_zero());
  EXPECT_THROW(verify_recursion(m, 4, kSmallT), std::invalid_argument);
  EXPECT_THROW(verify_recursion(m, 1, kSmallT), std::invalid_argument);
}

// Q_2|_W is the intersection form of s^(d-2)(omega) h^{d-2}, a positive
// multiple of the h^{d-2} form.
TEST(Recursion, IndexTwoIsMultipleOfPowerForm) {
  const int d = 4;
  auto m = model(d, 2, "1,1", 17);
  Form top = m.derived(d - 2);
  ASSERT_TRUE(top.is_homogeneous(0, 0));
  Rational c = top.coefficient(Monomial{0, 0}).re();
  EXPECT_GT(c, 0);
  Form hp = power(m.space().h(), d - 2);
  EXPECT_EQ(restrict_to_w(m.q(2), m.space().zeta_index()).matrix(), gram(hp).matrix() * c);
}

TEST(Augmentation2, DimensionFour) {
  auto m = model(4, 2, "2", 18);
  Augmentation2Report r = verify_augmentation2(m, default_t_samples());
  EXPECT_EQ(r.theorem.verdict, Verdict::kConsistent);
  EXPECT_EQ(r.restricted_signature, (Signature{1, 15, 0}));
}

TEST(Augmentation2, DimensionTwoMinkowski) {
  auto m = model(2, 1, "", 19);
  Augmentation2Report r = verify_augmentation2(m, default_t_samples());
  EXPECT_EQ(r.restricted_signature, (Signature{1, 3, 0}));
  EXPECT_TRUE(r.theorem.conclusions_hold());
  EXPECT_NE(r.theorem.verdict, Verdict::kInconsistent);
}

TEST(Augmentation2, DimensionFive) {
  auto m = model(5, 3, "2,1", 20);
  Augmentation2Report r = verify_augmentation2(m, kSmallT);
  EXPECT_EQ(r.restricted_signature, (Signature{1, 24, 0}));
  EXPECT_EQ(r.theorem.verdict, Verdict::kConsistent);
}

TEST(RemarkFamily, Signatures) {
  FormFamily f = remark_family(3);
  Vector e1 = unit_vector(3, 0);
  SymBilinearForm r0 = f.eval(0);
  EXPECT_EQ(signature(r0), (Signature{1, 1, 1}));
  EXPECT_TRUE(is_weak_hr_wrt(r0, e1));
  EXPECT_FALSE(is_hr(r0));
  for (Rational t : {Rational(1, 10), Rational(-1, 10)}) {
    EXPECT_EQ(signature(f.eval(t)), (Signature{1, 2, 0}));
    EXPECT_TRUE(is_hr_wrt(f.eval(t), e1));
  }
  FormFamily fp = f.derivative();
  EXPECT_EQ(fp.coefficients().size(), 1u);
  EXPECT_EQ(signature(fp.eval(0)), (Signature{1, 2, 0}));
}

TEST(PassingRadius, StopsAtFirstFailure) {
  std::vector<PsdSample> s = {{Rational(0), true}, {Rational(1, 10), true}, {Rational(-1, 10), false}, {Rational(1, 100), true}};
  auto r = passing_radius(s, [](const PsdSample& x) { return x.psd; });
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Rational(1, 100));
  std::vector<PsdSample> none = {{Rational(1, 10), true}};
  auto r2 = passing_radius(none, [](const PsdSample& x) { return x.psd; });
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(*r2, Rational(1, 10));
  std::vector<PsdSample> bad = {{Rational(0), false}};
  EXPECT_FALSE(passing_radius(bad, [](const PsdSample& x) { return x.psd; }).has_value());
}
