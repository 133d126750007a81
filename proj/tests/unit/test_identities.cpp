#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zvar/errors.hpp"
#include "zvar/identities.hpp"

using namespace zvar;
namespace fz = oracle::frozen;

TEST(Report, PassIffWithinTolerance) {
  EXPECT_TRUE(make_report("a", 1.0, 1.0 + 1e-13, 1e-12).pass);
  EXPECT_FALSE(make_report("a", 1.0, 1.0 + 1e-11, 1e-12).pass);
  const auto r = make_report("x", 2.0, 3.5, 2.0);
  EXPECT_EQ(r.abs_diff, 1.5);
  EXPECT_TRUE(r.pass);
}

TEST(CosReformulation, Examples) {
  const auto r3 = check_cos_reformulation(3, {-1, 1});
  EXPECT_TRUE(r3.pass);
  EXPECT_LE(r3.abs_diff, 1e-13);
  EXPECT_TRUE(check_cos_reformulation(2.5, {1}).pass);
  // Single term at c = 4, k = 1 by hand: 1 - cos(π/2) = 1 = 2 sin²(π/4).
  const auto r4 = check_cos_reformulation(4, {1});
  const double hand = (-2 * oracle::kGamma + oracle::kLn2) / (4 * oracle::kPi);
  EXPECT_NEAR(r4.lhs, hand, 1e-15);
  EXPECT_NEAR(r4.rhs, hand, 1e-15);
  EXPECT_THROW(check_cos_reformulation(3, {3}), SingularTermError);
  EXPECT_THROW(check_cos_reformulation(3, {0}), SingularTermError);
}

TEST(InverseSinSquared, Values) {
  const auto r2 = check_inverse_sin_squared(2);
  EXPECT_NEAR(r2.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r2.rhs, 1.0, 1e-15);
  EXPECT_NEAR(check_inverse_sin_squared(3).lhs, 8.0 / 3, 1e-14);
  const auto r12 = check_inverse_sin_squared(12);
  EXPECT_NEAR(r12.rhs, 143.0 / 3, 1e-13);
  EXPECT_TRUE(r12.pass);
  EXPECT_THROW(check_inverse_sin_squared(1), DomainError);
}

TEST(HalfRangeFold, Values) {
  const auto r2 = check_half_range_fold(2);
  EXPECT_EQ(r2.lhs, 0.0);
  EXPECT_NEAR(r2.rhs, 0.0, 1e-17);
  EXPECT_TRUE(check_half_range_fold(5).pass);
  EXPECT_TRUE(check_half_range_fold(8).pass);
}

TEST(WindowIdentities, IntegerAndNonEven) {
  for (int c = 2; c <= 12; ++c) EXPECT_TRUE(check_integer_window(c).pass) << c;
  for (double c : {1.3, 2.5, 3.0, 4.75, 7.0}) EXPECT_TRUE(check_window_fold(c).pass) << c;
  EXPECT_THROW(check_window_fold(4.0), ClassificationError);
}

TEST(DigammaTrig, HandValueAtTwo) {
  const auto r = check_digamma_trig(2);
  // (1/4pi)(log 4 + psi(1/2)) with psi(1/2) = -gamma - 2 log 2.
  const double hand = -oracle::kGamma / (4 * oracle::kPi);
  EXPECT_NEAR(r.lhs, hand, 1e-15);
  EXPECT_NEAR(r.rhs, hand, 1e-15);
  EXPECT_NEAR(hand, -0.0459334, 1e-7);
}

TEST(DigammaTrig, BothSourcesThroughTwelve) {
  for (int j = 2; j <= 12; ++j) {
    EXPECT_TRUE(check_digamma_trig(j, DigammaSource::gauss, 1e-11).pass) << j;
    EXPECT_TRUE(check_digamma_trig(j, DigammaSource::generic, 1e-11).pass) << j;
  }
}

TEST(CotSum, Vanishes) {
  EXPECT_NEAR(check_cot_sum_vanishes(2).lhs, 0.0, 1e-15);
  EXPECT_NEAR(check_cot_sum_vanishes(3).lhs, 0.0, 1e-14);
  EXPECT_LE(check_cot_sum_vanishes(9).abs_diff, 1e-8);
  for (int j = 2; j <= 12; ++j) EXPECT_TRUE(check_cot_sum_vanishes(j).pass) << j;
}

TEST(CosLogSum, ThroughTwelve) {
  for (int j = 2; j <= 12; ++j) EXPECT_TRUE(check_cos_log_sum(j).pass) << j;
}

TEST(WeightedCos, Examples) {
  const auto r = check_weighted_cos_sums(4, 1);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& x : r) {
    if (x.name.find("linear") != std::string::npos) EXPECT_NEAR(x.lhs, -2.0, 1e-14);
  }
  for (const auto& x : check_weighted_cos_sums(5, 2)) EXPECT_TRUE(x.pass) << x.name;
  for (const auto& x : check_weighted_cos_sums(6, 1)) {
    if (x.name.find("combined") != std::string::npos) {
      EXPECT_NEAR(x.rhs, -6.0 / (2 * std::pow(std::sin(oracle::kPi / 6), 2)), 1e-13);
      EXPECT_TRUE(x.pass);
    }
  }
  EXPECT_THROW(check_weighted_cos_sums(4, 2), DomainError);
  EXPECT_THROW(check_weighted_cos_sums(6, 0), DomainError);
}

TEST(WeightedCos, AllAdmissible) {
  for (int j = 2; j <= 12; ++j) {
    for (int k = 1; k <= (j - 1) / 2; ++k) {
      for (const auto& x : check_weighted_cos_sums(j, k)) EXPECT_TRUE(x.pass) << x.name;
    }
  }
}

TEST(ResidueLemma, Values) {
  const auto r = check_residue_lemma(1.5);
  EXPECT_NEAR(r.rhs, -5.0 / (48 * oracle::kPi), 1e-15);
  for (const auto& p : fz::kResidueLemma) {
    const auto x = check_residue_lemma(p.c);
    EXPECT_TRUE(x.pass) << p.c;
    EXPECT_NEAR(x.lhs, p.value, 1e-10) << p.c;
  }
  EXPECT_TRUE(check_residue_lemma(3.25).pass);
  EXPECT_THROW(check_residue_lemma(3.0), ClassificationError);
}

TEST(LogLemma, Values) {
  for (const auto& p : fz::kLogLemmaLhs) {
    const auto x = check_log_lemma(p.c);
    EXPECT_TRUE(x.pass) << p.c << " diff " << x.abs_diff;
    EXPECT_NEAR(x.lhs, p.value, 1e-10) << p.c;
  }
}

TEST(RunAll, DefaultProfilePasses) {
  const auto reports = run_all();
  EXPECT_GT(reports.size(), 150u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.name << " diff " << r.abs_diff;
  EXPECT_TRUE(all_pass(reports));
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const auto& a, const auto& b) { return a.name < b.name; }));
  std::set<std::string> names;
  for (const auto& r : reports) names.insert(r.name);
  EXPECT_EQ(names.size(), reports.size());
}

TEST(RunAll, Deterministic) {
  const auto a = run_all();
  const auto b = run_all();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].lhs, b[i].lhs);
    EXPECT_EQ(a[i].rhs, b[i].rhs);
  }
}

TEST(RunAll, TightProfileMarksFailures) {
  ToleranceProfile p = ToleranceProfile::standard();
  p.tolerance = 1e-15;
  const auto reports = run_all(p);
  EXPECT_FALSE(all_pass(reports));
  for (const auto& r : reports) EXPECT_EQ(r.tolerance, 1e-15);
}

TEST(RunAll, EmptyOverride) {
  ToleranceProfile p;
  EXPECT_TRUE(run_all(p).empty());
  EXPECT_TRUE(run_cross_methods(p).empty());
}

TEST(CrossMethods, DefaultProfilePasses) {
  const auto reports = run_cross_methods();
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.name << " diff " << r.abs_diff;
  EXPECT_GT(reports.size(), 60u);
}
