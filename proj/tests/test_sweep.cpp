#include "coxline/sweep.hpp"

#include <gtest/gtest.h>

namespace coxline {
namespace {

Integer binomial(long top, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), top, k);
  return r;
}

TEST(Sweep, NefClassOrderAndCount) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (long dmax = 0; dmax <= 4; ++dmax) {
      std::vector<DivisorClass> seen;
      for_each_nef_class(n, dmax, [&](const DivisorClass& D) {
        EXPECT_TRUE(is_nef(D));
        seen.push_back(D);
        return true;
      });
      EXPECT_EQ(Integer(static_cast<unsigned long>(seen.size())), binomial(dmax + n + 1, n + 1));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    }
  }
}

TEST(Sweep, BoundaryClasses) {
  for (const auto& D : h1_boundary_classes(3, 4)) {
    EXPECT_EQ(D.sum_a(), D.d() + 1);
    EXPECT_FALSE(is_nef(D));
  }
}

TEST(Sweep, PassesOnCollinearConfigurations) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto rep = run_sweep(PointConfig::standard(n), SweepOptions{3});
    EXPECT_TRUE(rep.passed()) << "n=" << n << " " << to_json(rep).dump();
    EXPECT_TRUE(rep.complete);
    EXPECT_EQ(Integer(static_cast<unsigned long>(rep.classes_checked)), binomial(3 + n + 1, n + 1));
    const std::size_t k = n - 2;
    EXPECT_EQ(rep.relation_pairs_checked, k * (k > 0 ? k - 1 : 0) / 2);
  }
}

TEST(Sweep, DegreeZero) {
  const auto rep = run_sweep(PointConfig::standard(4), SweepOptions{0});
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.classes_checked, 1u);
}

TEST(Sweep, CorruptedRelationIsReported) {
  const auto cfg = PointConfig::standard(4);
  auto rels = derive_relations(cfg);
  rels[0].b += 1;
  const auto rep = run_sweep(cfg, rels, SweepOptions{1});
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.failures[0].check, "relation_geometric:g1");
  EXPECT_EQ(rep.failures[0].expected, "0");
  EXPECT_NE(rep.failures[0].got, "0");
}

TEST(Sweep, OffLinePointIsDetected) {
  const auto cfg = PointConfig::standard(3);
  const auto rep = run_sweep(cfg.with_point_off_line(3, 1), derive_relations(cfg), SweepOptions{2});
  ASSERT_FALSE(rep.passed());
  bool closure_hit = false;
  for (const auto& f : rep.failures) {
    closure_hit |= f.check == "closure_h0_stripping" && f.divisor == DivisorClass::collinear_line(3);
  }
  EXPECT_TRUE(closure_hit);
}

TEST(Sweep, ResourceBoundMarksIncomplete) {
  SweepOptions opt{6};
  opt.max_classes = 10;
  const auto rep = run_sweep(PointConfig::standard(3), opt);
  EXPECT_FALSE(rep.complete);
  EXPECT_EQ(rep.classes_checked, 10u);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(to_json(rep)["complete"], false);
}

TEST(Sweep, Deterministic) {
  const auto a = to_json(run_sweep(PointConfig::standard(3).with_point_off_line(3, 2), derive_relations(PointConfig::standard(3)), SweepOptions{3})).dump();
  const auto b = to_json(run_sweep(PointConfig::standard(3).with_point_off_line(3, 2), derive_relations(PointConfig::standard(3)), SweepOptions{3})).dump();
  EXPECT_EQ(a, b);
}

TEST(Sweep, RejectsNegativeBound) { EXPECT_THROW(run_sweep(PointConfig::standard(3), SweepOptions{-1}), DomainError); }

}  // namespace
}  // namespace coxline
