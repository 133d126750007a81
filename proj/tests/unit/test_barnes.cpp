#include <cmath>
#include <limits>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zvar/barnes.hpp"
#include "zvar/errors.hpp"

using namespace zvar;
namespace fz = oracle::frozen;

namespace {

// d/dc ζ_c'(0) at c = j straight from the integer formula with Boost's digamma.
double dzeta_integer_reference(int j) {
  const double jd = j;
  double sum = 0.0;
  for (int p = 1; p <= j; ++p) sum += p * (jd - p) * boost::math::digamma(p / jd);
  return -1.0 / 12 - 1.0 / (8 * jd * jd) + (1 - jd * jd) / (12 * jd * jd) * std::log(jd) -
         sum / (2 * jd * jd * jd);
}

}  // namespace

TEST(ParameterC, Classification) {
  EXPECT_TRUE(ParameterC(3.0).is_integer());
  EXPECT_TRUE(ParameterC(3.0 + 5e-10).is_integer());
  EXPECT_FALSE(ParameterC(3.0 + 2e-9).is_integer());
  EXPECT_FALSE(ParameterC(2.5).is_integer());
  EXPECT_EQ(ParameterC(2.6).nearest_integer(), 3);
  EXPECT_THROW(ParameterC(0.0), DomainError);
  EXPECT_THROW(ParameterC(-2.0), DomainError);
  EXPECT_THROW(ParameterC{std::numeric_limits<double>::infinity()}, DomainError);
}

TEST(Laurent, Coefficients) {
  const auto b1 = laurent_coefficients(ParameterC(1));
  EXPECT_DOUBLE_EQ(b1.b_minus2, 1.0);
  EXPECT_DOUBLE_EQ(b1.b_minus1, -1.0);
  EXPECT_DOUBLE_EQ(b1.b_zero, 5.0 / 12);
  const auto b2 = laurent_coefficients(ParameterC(2));
  EXPECT_DOUBLE_EQ(b2.b_minus2, 0.5);
  EXPECT_DOUBLE_EQ(b2.b_minus1, -0.75);
  EXPECT_NEAR(b2.b_zero, 0.45833333333333, 1e-13);
  EXPECT_NEAR(laurent_coefficients(ParameterC(oracle::kPi)).b_zero,
              laurent_coefficients(ParameterC(1 / oracle::kPi)).b_zero, 1e-15);
}

TEST(Kernel, LaurentExpansionAtSmallT) {
  // t² F(t) → b_{-2}, then (F - b_{-2}/t²) t → b_{-1}, then the remainder → b_0.
  for (double c : {0.4, 1.0, 2.7}) {
    const auto b = laurent_coefficients(ParameterC(c));
    const double t = 1e-4;
    const double f = barnes_kernel(t, c);
    EXPECT_NEAR(f * t * t, b.b_minus2, 1e-3);
    EXPECT_NEAR((f - b.b_minus2 / (t * t)) * t, b.b_minus1, 1e-3);
  }
}

TEST(Kernel, SeriesBranchMatchesDirectEvaluation) {
  // At the switch point the direct form is still accurate to ~1e-12; both
  // branches must agree there and be continuous.
  for (double c : {0.3, 1.0, 1.5, 4.0, 11.0}) {
    const ParameterC pc(c);
    const auto b = laurent_coefficients(pc);
    const double t0 = 1.0 / std::max(c, 1.0);
    for (double t : {0.999 * t0, t0, 1.001 * t0, 0.5 * t0}) {
      const double direct = (barnes_kernel(t, c) - b.b_minus2 / (t * t) - b.b_minus1 / t - b.b_zero) / t;
      EXPECT_NEAR(barnes_kernel_regularized(t, pc), direct, 1e-10) << c << " " << t;
      const double c2 = c * c;
      const double ddirect = barnes_kernel_dc(t, c) +
                             (1 / (c2 * t * t) - 1 / (2 * c2 * t) - 1.0 / 12 + 1 / (12 * c2)) / t;
      EXPECT_NEAR(barnes_kernel_dc_regularized(t, pc), ddirect, 1e-9) << c << " " << t;
    }
    // Inside the series branch the c-derivative kernel is the c-derivative of the kernel.
    const double h = 1e-5;
    const double t = 0.3 * t0;
    const double fd = (barnes_kernel_regularized(t, ParameterC(c + h)) -
                       barnes_kernel_regularized(t, ParameterC(c - h))) / (2 * h);
    EXPECT_NEAR(barnes_kernel_dc_regularized(t, pc), fd, 1e-7) << c;
  }
}

TEST(Kernel, DerivativeKernelIsCDerivative) {
  for (double c : {0.7, 2.0, 3.3}) {
    for (double t : {0.5, 1.0, 3.0}) {
      const double h = 1e-5;
      const double fd = (barnes_kernel(t, c + h) - barnes_kernel(t, c - h)) / (2 * h);
      EXPECT_NEAR(barnes_kernel_dc(t, c) * t, fd, 1e-8 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Series, ReducesToRiemannAtCEqualsOne) {
  const ParameterC one(1);
  EXPECT_NEAR(zeta_c_series(3, one), 0.442877163688632, 1e-11);
  EXPECT_NEAR(zeta_c_series(3, one), boost::math::zeta(2.0) - boost::math::zeta(3.0), 1e-12);
  EXPECT_NEAR(zeta_c_series(4, one), boost::math::zeta(3.0) - boost::math::zeta(4.0), 1e-12);
  EXPECT_NEAR(zeta_c_series(4, one), 0.119733669448456, 1e-11);
}

TEST(Series, ScalingLaw) {
  for (double c : {1.5, 2.0}) {
    EXPECT_NEAR(zeta_c_series(3, ParameterC(1 / c)), std::pow(c, 3) * zeta_c_series(3, ParameterC(c)),
                1e-9);
  }
}

TEST(Series, BruteForcePartialSum) {
  // Σ over cℓ + n <= M directly; the remainder is O(M^{2-s}).
  const double c = 1.5, s = 4.0;
  double sum = 0.0;
  for (int l = 1; l <= 4000; ++l) {
    for (int n = 1; n <= 4000; ++n) sum += std::pow(c * l + n, -s);
  }
  EXPECT_NEAR(zeta_c_series(s, ParameterC(c)), sum, 1e-7);
}

TEST(Series, Domain) {
  EXPECT_THROW(zeta_c_series(2.1, ParameterC(1)), DomainError);
  EXPECT_THROW(zeta_c_series(2.0, ParameterC(1)), DomainError);
}

TEST(Integral, MatchesSeries) {
  for (double s : {2.5, 3.0, 4.0}) {
    for (double c : {1.0, 1.5, 2.0, oracle::kPi}) {
      const ParameterC pc(c);
      EXPECT_NEAR(zeta_c_integral(s, pc), zeta_c_series(s, pc), 1e-9) << s << " " << c;
    }
  }
  EXPECT_NEAR(zeta_c_integral(3, ParameterC(1)), 0.442877163688632, 1e-10);
  EXPECT_NEAR(zeta_c_integral(3, ParameterC(1.5)), zeta_c_series(3, ParameterC(1.5)), 1e-9);
}

TEST(Integral, NegativeStripIsDeterministicAndMatchesRiemann) {
  const ParameterC two(2);
  const double a = zeta_c_integral(-0.5, two);
  const double b = zeta_c_integral(-0.5, two);
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_EQ(a, b);
  // At c = 1: ζ_1(s) = ζ_R(s-1) - ζ_R(s), valid throughout the continuation.
  for (double s : {-0.5, 0.3, 0.5, 1.5, 2.5}) {
    EXPECT_NEAR(zeta_c_integral(s, ParameterC(1)), boost::math::zeta(s - 1) - boost::math::zeta(s), 1e-10)
        << s;
  }
}

TEST(Integral, Poles) {
  EXPECT_THROW(zeta_c_integral(1.0, ParameterC(2)), PoleError);
  EXPECT_THROW(zeta_c_integral(2.0, ParameterC(2)), PoleError);
  EXPECT_THROW(zeta_c_integral(-1.0, ParameterC(2)), DomainError);
  EXPECT_EQ(zeta_c_integral(0.0, ParameterC(2)), zeta_c_at0(ParameterC(2)));
}

TEST(At0, Values) {
  EXPECT_NEAR(zeta_c_at0(ParameterC(1)), -1.0 / 12 + 0.5, 1e-15);
  EXPECT_NEAR(zeta_c_at0(ParameterC(2)), 0.45833333333333, 1e-13);
  EXPECT_NEAR(zeta_c_at0(ParameterC(2.7)), zeta_c_at0(ParameterC(1 / 2.7)), 1e-15);
  // Limit of the continuation at s = 0 from both sides.
  for (double c : {1.0, 2.7}) {
    const ParameterC pc(c);
    const double h = 1e-3;
    const double lim = 0.5 * (zeta_c_integral(h, pc) + zeta_c_integral(-h, pc));
    EXPECT_NEAR(lim, zeta_c_at0(pc), 1e-6);
  }
}

TEST(Prime0, RiemannReduction) {
  const double ref = oracle::kZetaPrimeMinus1 - oracle::kZetaPrime0;
  const auto e = zeta_c_prime0_estimate(ParameterC(1));
  EXPECT_NEAR(e.value, ref, 1e-10);
  EXPECT_NEAR(e.value, 0.7535173895042218, 1e-10);
  EXPECT_LT(e.error_estimate, 1e-10);
  EXPECT_GT(e.evaluations, 0);
}

TEST(Prime0, SymmetricDifferenceInS) {
  for (double c : {1.5, 3.0}) {
    const ParameterC pc(c);
    const double h = 1e-4;
    EXPECT_NEAR((zeta_c_integral(h, pc) - zeta_c_integral(-h, pc)) / (2 * h), zeta_c_prime0(pc), 1e-7);
  }
}

TEST(Prime0, FunctionalRelation) {
  for (double c : {1.5, 2.0, 3.0, oracle::kPi}) {
    const double lhs = zeta_c_prime0(ParameterC(1 / c)) - zeta_c_prime0(ParameterC(c));
    EXPECT_NEAR(lhs, zeta_c_at0(ParameterC(c)) * std::log(c), 1e-9) << c;
  }
}

TEST(Prime0, FiniteDifferenceInC) {
  for (double c : {1.3, 2.0, 3.6}) {
    const double h = 1e-4;
    const double fd = (zeta_c_prime0(ParameterC(c + h)) - zeta_c_prime0(ParameterC(c - h))) / (2 * h);
    EXPECT_NEAR(fd, dzeta_c_prime0_dc(ParameterC(c)), 1e-6) << c;
  }
}

TEST(Dzeta, QuadratureRoute) {
  EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(1)), -5.0 / 24, 1e-10);
  const double j2 = -1.0 / 12 - 1.0 / 32 + oracle::kLn2 / 16 + oracle::kGamma / 16;
  EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(2)), j2, 1e-10);
  EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(2)), fz::kDzetaDc2, 1e-10);
  EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(3)), dzeta_integer_reference(3), 1e-10);
  EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(3)), fz::kDzetaDc3, 1e-10);
}

TEST(Dzeta, IntegerClosedForm) {
  EXPECT_NEAR(dzeta_c_prime0_dc_integer(1), -0.2083333333333, 1e-13);
  EXPECT_NEAR(dzeta_c_prime0_dc_integer(2), fz::kDzetaDc2, 1e-14);
  EXPECT_NEAR(dzeta_c_prime0_dc_integer(5), fz::kDzetaDc5, 1e-14);
  EXPECT_NEAR(dzeta_c_prime0_dc_integer(5), dzeta_c_prime0_dc(ParameterC(5)), 1e-9);
  for (int j = 1; j <= 12; ++j) {
    EXPECT_NEAR(dzeta_c_prime0_dc_integer(j), dzeta_integer_reference(j), 1e-13) << j;
  }
  EXPECT_THROW(dzeta_c_prime0_dc_integer(0), DomainError);
}

TEST(Dzeta, CrossMethodOneToTen) {
  for (int j = 1; j <= 10; ++j) {
    EXPECT_NEAR(dzeta_c_prime0_dc(ParameterC(j)), dzeta_c_prime0_dc_integer(j), 1e-9) << j;
  }
}

TEST(DzetaAtS, Values) {
  EXPECT_NEAR(dzeta_c_at_s_integer(0, 2), 0.0625, 1e-15);
  EXPECT_EQ(dzeta_c_at_s_integer(0, 1), 0.0);
  // d/dc ζ_c(0) = d/dc b_0(c) = 1/12 - 1/(12c²)
  EXPECT_NEAR(dzeta_c_at_s_integer(0, 3), 1.0 / 12 - 1.0 / 108, 1e-15);
  EXPECT_THROW(dzeta_c_at_s_integer(1, 2), PoleError);
  EXPECT_THROW(dzeta_c_at_s_integer(2, 2), PoleError);
}

TEST(DzetaAtS, BruteForceAtThree) {
  // -3 Σ ℓ (2ℓ + n)^{-4}: group by m = 2ℓ + n; ℓ runs over 1..K, K = ⌊(m-1)/2⌋.
  const long m_max = 2000000;
  double sum = 0.0;
  for (long m = m_max; m >= 3; --m) {
    const double k = static_cast<double>((m - 1) / 2);
    sum += k * (k + 1) / 2 * std::pow(static_cast<double>(m), -4);
  }
  // Σ_{m>M} ~ m²/8 · m^{-4} → 1/(8M)
  const double brute = -3.0 * (sum + 1.0 / (8.0 * m_max));
  EXPECT_NEAR(dzeta_c_at_s_integer(3, 2), brute, 1e-8);
}

TEST(DzetaAtS, FiniteDifferenceOfContinuation) {
  for (double s : {-0.5, 0.5, 3.0}) {
    for (int j : {2, 3}) {
      const double h = 1e-4;
      const double fd = (zeta_c_integral(s, ParameterC(j + h)) - zeta_c_integral(s, ParameterC(j - h))) / (2 * h);
      EXPECT_NEAR(dzeta_c_at_s_integer(s, j), fd, 1e-6) << s << " " << j;
    }
  }
}
