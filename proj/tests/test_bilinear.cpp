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

#include "hrlab/bilinear.hpp"
#include "hrlab/random.hpp"
#include "hrlab/symfunc.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hrlab;

namespace {

SymBilinearForm diag_form(std::vector<long> d) {
  Vector v;
  for (long x : d) v.push_back(Rational(x));
  return {Matrix::diagonal(v), "standard"};
}

Vector vec(std::vector<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST(SymBilinearForm, RejectsNonSymmetric) {
  Matrix m(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(SymBilinearForm(m, "x"), std::invalid_argument);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(diag_form({2, -3, 0})), (Signature{1, 1, 1}));
  Matrix hyp(2, 2);
  hyp(0, 1) = hyp(1, 0) = 1;
  EXPECT_EQ(signature(hyp), (Signature{1, 1, 0}));
  EXPECT_EQ(signature(Matrix(3, 3)), (Signature{0, 0, 3}));
}

TEST(Signature, ZeroDiagonalNeedsOffDiagonalPivot) {
  Matrix m(3, 3);
  m(0, 2) = m(2, 0) = 2;
  m(1, 1) = -1;
  EXPECT_EQ(signature(m), (Signature{1, 2, 0}));
}

TEST(Signature, CongruenceInvariant) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix g = random_symmetric(n, rng);
    Matrix p = random_invertible(n, rng);
    EXPECT_EQ(signature(p.transpose() * g * p), signature(g));
  }
}

TEST(Congruence, DiagonalisesExactly) {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix g = random_symmetric(n, rng);
    Congruence c = diagonalize(g);
    EXPECT_EQ(c.basis.transpose() * g * c.basis, Matrix::diagonal(c.diagonal));
    EXPECT_EQ(rank(c.basis), n);
  }
}

TEST(HrPredicates, Examples) {
  EXPECT_TRUE(is_hr_wrt(diag_form({1, -1, -1}), vec({1, 0, 0})));
  EXPECT_FALSE(is_hr(diag_form({1, 1, -1})));
  EXPECT_FALSE(is_hr(diag_form({1, -1, 0})));
  EXPECT_FALSE(is_hr_wrt(diag_form({1, -1, -1}), vec({0, 1, 0})));
}

TEST(WeakHr, Examples) {
  EXPECT_TRUE(is_weak_hr_wrt(diag_form({1, 0, -1}), vec({1, 0, 0})));
  Rng rng(33);
  for (int t = 0; t < 10; ++t) EXPECT_FALSE(is_weak_hr_wrt(diag_form({1, 1, -1}), random_vector(3, rng)));
  // (x1 + x2)^2 - x3^2
  Matrix m(3, 3);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1;
  m(2, 2) = -1;
  SymBilinearForm q(m, "R^3");
  EXPECT_TRUE(is_weak_hr_wrt(q, vec({1, 0, 0})));
  EXPECT_FALSE(is_hr(q));
}

TEST(HodgeIndexDefect, Examples) {
  SymBilinearForm t = hodge_index_defect(diag_form({1, -1}), vec({1, 0}));
  EXPECT_EQ(t.matrix(), diag_form({0, 1}).matrix());
  EXPECT_TRUE(is_positive_semidefinite(t));
  SymBilinearForm u = hodge_index_defect(diag_form({1, 1}), vec({1, 0}));
  EXPECT_EQ(u.matrix(), diag_form({0, -1}).matrix());
  EXPECT_FALSE(is_positive_semidefinite(u));
}

TEST(HodgeIndexDefect, KernelIsLineOfHForHrForms) {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    Matrix p = random_invertible(n, rng);
    Vector d(n, Rational(-1));
    d[0] = 1;
    SymBilinearForm q(p.transpose() * Matrix::diagonal(d) * p, "standard");
    auto h = support::find_positive_vector(q, rng);
    ASSERT_TRUE(h.has_value());
    auto ker = nullspace(hodge_index_defect(q, *h).matrix());
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_TRUE(in_span({*h}, ker[0]));
  }
}

TEST(PrimitiveRestriction, Examples) {
  SymBilinearForm r = primitive_restriction(diag_form({1, -1, -1}), vec({1, 0, 0}));
  EXPECT_EQ(r.matrix(), diag_form({-1, -1}).matrix());
  SymBilinearForm deg = primitive_restriction(diag_form({1, 0}), vec({1, 0}));
  EXPECT_EQ(deg.matrix(), diag_form({0}).matrix());
  EXPECT_FALSE(is_negative_definite(deg));
  EXPECT_THROW(primitive_restriction(diag_form({1, -1}), vec({1, 1})), std::invalid_argument);
}

TEST(PrimitiveRestriction, MinkowskiIsNegativeDefinite) {
  SymBilinearForm g = gram(Form::one(2));
  Vector h = coordinates_11(hermitian_to_form(HermitianMatrix::identity(2)));
  SymBilinearForm r = primitive_restriction(g, h);
  EXPECT_EQ(r.dim(), 3u);
  EXPECT_TRUE(is_negative_definite(r));
}

TEST(ProportionalityWitness, Examples) {
  SymBilinearForm q = diag_form({1, -1, -1});
  std::vector<Vector> vp = {vec({1, 1, 0}), vec({0, 0, 1})};
  Vector g = vec({1, 1, 0});
  EXPECT_EQ(proportionality_witness(q, vp, vec({0, 0, 0}), g), 0);
  EXPECT_EQ(proportionality_witness(q, vp, vec({3, 3, 0}), g), 3);
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    Rational s = rng.small_fraction(5), k = rng.small_fraction(5);
    Vector gamma = {s, s, Rational(0)};
    Vector beta = {k * s, k * s, Rational(0)};
    EXPECT_EQ(proportionality_witness(q, vp, beta, gamma), k);
  }
  EXPECT_THROW(proportionality_witness(diag_form({1, 1, -1}), vp, g, g), std::invalid_argument);
  EXPECT_THROW(proportionality_witness(q, vp, vec({0, 0, 1}), g), std::invalid_argument);
  EXPECT_THROW(proportionality_witness(q, vp, g, vec({0, 0, 0})), std::invalid_argument);
  EXPECT_THROW(proportionality_witness(q, {vec({1, 0, 0})}, g, g), std::invalid_argument);
}

TEST(Gram, MinkowskiForm) {
  SymBilinearForm g = gram(Form::one(2));
  EXPECT_EQ(signature(g), (Signature{1, 3, 0}));
  Rng rng(36);
  for (int t = 0; t < 20; ++t) {
    HermitianMatrix a = random_hermitian(2, rng);
    Vector x = coordinates_11(hermitian_to_form(a));
    Rational det = a(0, 0).re() * a(1, 1).re() - a(0, 1).norm();
    EXPECT_EQ(g.value(x), 2 * det);
    EXPECT_EQ(g.value(x), oracle::top_ratio_of_11_product({a, a}));
  }
}

TEST(Gram, ZeroAndErrors) {
  for (int d = 2; d <= 4; ++d) EXPECT_TRUE(gram(Form(d)).matrix().is_zero());
  EXPECT_THROW(gram(Form::one(3)), std::invalid_argument);
  EXPECT_THROW(gram(volume_form(3) * GaussianRational::i()), std::invalid_argument);
}

TEST(Gram, ClassicalPowerCase) {
  Form w = hermitian_to_form(HermitianMatrix::identity(3));
  EXPECT_EQ(signature(gram(schur(Partition({1}), std::vector<Form>{w}))), (Signature{1, 8, 0}));
}

TEST(Gram, SymmetricForRealForms) {
  Rng rng(37);
  for (int d = 2; d <= 4; ++d) {
    Form omega = Form::one(d);
    for (int k = 0; k < d - 2; ++k) omega = omega * hermitian_to_form(random_hermitian(d, rng));
    EXPECT_TRUE(gram(omega).matrix().is_symmetric());
  }
}

// Four HR conditions agree, and weak HR matches Q(h) > 0 plus a PSD defect.
TEST(Equivalences, ConditionsAgreeOnRandomForms) {
  Rng rng(38);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      SymBilinearForm q = support::random_form_mixed_signature(n, rng);
      auto h = support::find_positive_vector(q, rng);
      if (!h) continue;
      bool c1 = support::hr_signature(q);
      EXPECT_EQ(support::hr_negative_subspace(q), c1);
      EXPECT_EQ(support::hr_primitive_negative(q, *h), c1);
      EXPECT_EQ(support::hr_hodge_index(q, *h), c1);
      bool weak = is_weak_hr_wrt(q, *h);
      EXPECT_EQ(weak, sgn(q.value(*h)) > 0 && is_positive_semidefinite(hodge_index_defect(q, *h)));
      Vector other = random_vector(n, rng);
      EXPECT_EQ(is_weak_hr_wrt(q, other),
                sgn(q.value(other)) > 0 && is_positive_semidefinite(hodge_index_defect(q, other)));
    }
}
