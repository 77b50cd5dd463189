#include "coxline/relations.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace coxline {
namespace {

PointConfig random_config(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  std::vector<Rational> t;
  while (t.size() < n) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
  }
  Rational qy(num(rng), den(rng));
  if (qy == 0) qy = 1;
  return {std::move(t), PlanePoint{Rational(num(rng), den(rng)), qy, Rational(num(rng), den(rng))}};
}

TEST(MonomialOrder, LeadingTermOfEachRelation) {
  const std::size_t n = 5;
  for (std::size_t i = 1; i <= n - 2; ++i) {
    EXPECT_TRUE(grlex_less(CoxMonomial::s_e(n, n - 1), CoxMonomial::s_e(n, i)));
    EXPECT_TRUE(grlex_less(CoxMonomial::s_e(n, n), CoxMonomial::s_e(n, i)));
  }
  // degree first
  CoxMonomial l = CoxMonomial::unit(n);
  l.lambda = 3;
  EXPECT_TRUE(grlex_less(CoxMonomial::s_e(n, 1), l));
  // s > e > l within a degree
  CoxMonomial s5 = CoxMonomial::unit(n), e1 = CoxMonomial::unit(n), l1 = CoxMonomial::unit(n);
  s5.sigma[4] = 1;
  e1.epsilon[0] = 1;
  l1.lambda = 1;
  EXPECT_TRUE(grlex_less(e1, s5));
  EXPECT_TRUE(grlex_less(l1, e1));
}

TEST(DeriveRelations, ThreePoints) {
  const PointConfig cfg({Rational(0), Rational(1), Rational(2)}, PlanePoint{0, 1, 0});
  const auto rels = derive_relations(cfg);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0], (Relation{1, Rational(-2), Rational(1)}));
  EXPECT_EQ(relation_polynomial(3, rels[0]).str(), "s1*e1 - 2*s2*e2 + s3*e3");
}

TEST(DeriveRelations, TwoPointsHaveNone) { EXPECT_TRUE(derive_relations(PointConfig::standard(2)).empty()); }

TEST(DeriveRelations, FourPointsVerifiedAsForms) {
  const auto cfg = PointConfig::standard(4);
  const auto rels = derive_relations(cfg);
  ASSERT_EQ(rels.size(), 2u);
  // x + a(x - 2z) + b(x - 3z) = 0 and (x - z) + a(x - 2z) + b(x - 3z) = 0
  EXPECT_EQ(rels[0], (Relation{1, Rational(-3), Rational(2)}));
  EXPECT_EQ(rels[1], (Relation{2, Rational(-2), Rational(1)}));
  for (const auto& r : rels) EXPECT_TRUE(verify_relation_geometrically(cfg, r));
}

TEST(DeriveRelations, RandomConfigurations) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const PointConfig cfg = random_config(rng, n);
    const auto rels = derive_relations(cfg);
    ASSERT_EQ(rels.size(), n - 2);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      EXPECT_EQ(rels[k].index, k + 1);
      EXPECT_NE(rels[k].a, 0);
      EXPECT_NE(rels[k].b, 0);
      EXPECT_TRUE(verify_relation_geometrically(cfg, rels[k]));
      const auto g = relation_polynomial(n, rels[k]);
      for (const auto& [m, c] : g.terms()) {
        EXPECT_EQ(degree_of(m), DivisorClass::line(n));
      }
    }
    EXPECT_TRUE(leading_terms_coprime(rels, n));
  }
}

TEST(VerifyGeometrically, PerturbedCoefficientFails) {
  const auto cfg = PointConfig::standard(3);
  auto r = derive_relations(cfg).front();
  EXPECT_TRUE(verify_relation_geometrically(cfg, r));
  r.a += 1;
  EXPECT_FALSE(verify_relation_geometrically(cfg, r));
  EXPECT_TRUE(verify_relations_geometrically(PointConfig::standard(2), {}));
}

TEST(NormalForm, Examples) {
  const std::size_t n = 3;
  const auto rels = derive_relations(PointConfig::standard(n));
  const auto s1e1 = GradedPolynomial::monomial(CoxMonomial::s_e(n, 1));
  GradedPolynomial expected;
  expected.add_term(CoxMonomial::s_e(n, 2), 2);
  expected.add_term(CoxMonomial::s_e(n, 3), -1);
  const auto res = normal_form_traced(s1e1, rels, n);
  EXPECT_EQ(res.remainder, expected);
  ASSERT_EQ(res.trace.size(), 1u);
  EXPECT_EQ(res.trace[0].divisor, 1u);
  EXPECT_TRUE(res.trace[0].multiplier.is_unit());
  EXPECT_EQ(res.trace[0].coeff, 1);

  const auto s3e3 = GradedPolynomial::monomial(CoxMonomial::s_e(n, 3));
  EXPECT_EQ(normal_form(s3e3, rels, n), s3e3);
  EXPECT_TRUE(normal_form(relation_polynomial(n, rels[0]), rels, n).is_zero());
}

TEST(NormalForm, RejectsInhomogeneousInput) {
  const std::size_t n = 3;
  GradedPolynomial p = GradedPolynomial::monomial(CoxMonomial::s_e(n, 1));
  p.add_term(CoxMonomial::unit(n), 1);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_THROW(normal_form(p, derive_relations(PointConfig::standard(n)), n), DomainError);
}

TEST(NormalForm, IdempotentAndSupportedOnStandardMonomials) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto rels = derive_relations(PointConfig::standard(n));
    for (const auto& D : testing::box(n, 2, 0, 2)) {
      for (const auto& m : enumerate_monomials_of_degree(D)) {
        const auto nf = normal_form(GradedPolynomial::monomial(m), rels, n);
        for (const auto& [mono, c] : nf.terms()) ASSERT_FALSE(in_initial_ideal(mono)) << m.str();
        ASSERT_EQ(normal_form(nf, rels, n), nf);
        ASSERT_TRUE(nf.is_homogeneous());
      }
    }
  }
}

TEST(SPolynomial, ReducesToZero) {
  for (std::size_t n : {4u, 5u, 6u, 7u}) {
    const auto rels = derive_relations(PointConfig::standard(n));
    for (std::size_t i = 1; i <= rels.size(); ++i) {
      for (std::size_t j = i + 1; j <= rels.size(); ++j) {
        const auto res = spoly_reduce_traced(i, j, rels, n);
        EXPECT_TRUE(res.remainder.is_zero()) << "n=" << n << " (" << i << "," << j << ")";
        EXPECT_FALSE(res.trace.empty());
        EXPECT_TRUE(s_polynomial(i, j, rels, n).is_homogeneous());
      }
    }
  }
}

TEST(SPolynomial, ReducesToZeroEvenWithArbitraryCoefficients) {
  // coprime leading terms suffice; the coefficients play no role
  std::vector<Relation> rels{{1, Rational(5, 7), Rational(-3)}, {2, Rational(1), Rational(11, 2)},
                             {3, Rational(-4), Rational(1, 9)}};
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) EXPECT_TRUE(spoly_reduce(i, j, rels, 5).is_zero());
}

TEST(SPolynomial, IndexValidation) {
  const auto rels = derive_relations(PointConfig::standard(5));
  EXPECT_THROW(spoly_reduce(2, 2, rels, 5), DomainError);
  EXPECT_THROW(spoly_reduce(0, 1, rels, 5), DomainError);
  EXPECT_THROW(spoly_reduce(1, 4, rels, 5), DomainError);
}

TEST(NormalForm, SpanDimensionMatchesStandardCount) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto rels = derive_relations(PointConfig::standard(n));
    for (const auto& D : testing::box(n, 3, 0, 3)) {
      if (!is_nef(D)) continue;
      EXPECT_EQ(normal_form_span_dimension(D, rels), hilbert_function_RmodJ(D)) << D.str();
    }
  }
}

TEST(CompleteIntersection, Numerology) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto rels = derive_relations(PointConfig::standard(n));
    EXPECT_EQ(rels.size(), n - 2);
    EXPECT_EQ(generator_count(n), 2 * n + 1);
    EXPECT_EQ(generator_count(n) - rels.size(), n + 3);
  }
}

}  // namespace
}  // namespace coxline
