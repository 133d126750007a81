#include "zvar/barnes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zvar/errors.hpp"
#include "zvar/specfun.hpp"

namespace zvar {
namespace {

// Bernoulli numbers B_0 … B_20 (B_1 = -½ convention of x/(e^x - 1)).
constexpr std::array<double, 21> kBernoulli = {
    1.0,  -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0, -1.0 / 30.0, 0.0,
    5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0, 0.0, -3617.0 / 510.0, 0.0,
    43867.0 / 798.0, 0.0, -174611.0 / 330.0,
};
constexpr int kSeriesOrder = 20;
constexpr int kRegularizedTerms = kSeriesOrder - 2;  // coefficients of t^0 … t^17

// Taylor coefficients of the regularized kernels. With
//   (ct/(e^{ct}-1)) (t/(e^t-1)) = Σ_n p_n(c) t^n,
// the kernel is Σ_n (p_n/c) t^{n-2}, so the regularized kernel has
// coefficients p_{m+3}/c and its c-derivative d/dc (p_{m+3}/c).
struct KernelSeries {
  std::array<double, kRegularizedTerms> value{};
  std::array<double, kRegularizedTerms> dc{};
  double cutoff = 0.0;  // series used for t <= cutoff
};

double inv_factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return 1.0 / f;
}

KernelSeries kernel_series(double c) {
  KernelSeries s;
  for (int m = 0; m < kRegularizedTerms; ++m) {
    const int n = m + 3;
    double p = 0.0;
    double dp = 0.0;
    double cpow = 1.0;  // c^i
    for (int i = 0; i <= n; ++i) {
      const double w = kBernoulli[i] * kBernoulli[n - i] * inv_factorial(i) * inv_factorial(n - i);
      if (i > 0) dp += i * w * (cpow / c);
      p += w * cpow;
      cpow *= c;
    }
    s.value[m] = p / c;
    s.dc[m] = (dp * c - p) / (c * c);
  }
  s.cutoff = 1.0 / std::max(c, 1.0);
  return s;
}

double horner(const std::array<double, kRegularizedTerms>& coeffs, double t) {
  double acc = 0.0;
  for (int m = kRegularizedTerms - 1; m >= 0; --m) acc = acc * t + coeffs[m];
  return acc;
}

double regularized(double t, double c, const LaurentCoefficients& b, const KernelSeries& series) {
  if (t <= series.cutoff) return horner(series.value, t);
  return (barnes_kernel(t, c) - b.b_minus2 / (t * t) - b.b_minus1 / t - b.b_zero) / t;
}

double regularized_dc(double t, double c, const KernelSeries& series) {
  if (t <= series.cutoff) return horner(series.dc, t);
  const double c2 = c * c;
  return barnes_kernel_dc(t, c) + (1.0 / (c2 * t * t) - 1.0 / (2.0 * c2 * t) - 1.0 / 12.0 +
                                   1.0 / (12.0 * c2)) / t;
}

// 1/Γ(s) for s > -1.
double reciprocal_gamma(double s) {
  if (s > 0.0) return std::exp(-log_gamma(s));
  if (s == 0.0) return 0.0;
  return s * std::exp(-log_gamma(s + 1.0));
}

// Σ_{n>=1} (x + n)^{-a}, a > 1, x >= 0: direct terms plus Euler–Maclaurin tail.
// Writes the magnitude of the first omitted correction to *remainder.
double shifted_power_sum(double a, double x, int direct, double* remainder) {
  double sum = 0.0;
  for (int n = 1; n < direct; ++n) sum += std::pow(x + n, -a);
  const double y = x + direct;
  sum += std::pow(y, 1.0 - a) / (a - 1.0) + 0.5 * std::pow(y, -a);
  double poch = a;
  double ypow = std::pow(y, -a - 1.0);
  constexpr int kCorrections = 6;
  for (int k = 1; k <= kCorrections; ++k) {
    sum += kBernoulli[2 * k] * inv_factorial(2 * k) * poch * ypow;
    poch *= (a + 2 * k - 1) * (a + 2 * k);
    ypow /= y * y;
  }
  *remainder += std::abs(kBernoulli[2 * kCorrections + 2] *
                         inv_factorial(2 * kCorrections + 2) * poch * ypow);
  return sum;
}

void require_not_pole(double s) {
  if (s == 1.0 || s == 2.0) {
    throw PoleError("zeta_c: pole at s = " + std::to_string(s));
  }
}

}  // namespace

ParameterC::ParameterC(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("ParameterC: c must be finite and > 0, got " + std::to_string(c));
  }
  nearest_ = std::lround(c);
  integer_ = std::abs(c - static_cast<double>(nearest_)) <= kIntegerTolerance;
}

LaurentCoefficients laurent_coefficients(const ParameterC& param) {
  const double c = param.value();
  return {1.0 / c, -0.5 - 0.5 / c, 0.25 + c / 12.0 + 1.0 / (12.0 * c), c};
}

double barnes_kernel(double t, double c) {
  return 1.0 / (std::expm1(c * t) * std::expm1(t));
}

double barnes_kernel_dc(double t, double c) {
  // e^{ct}/(e^{ct}-1)² = 1/((e^{ct}-1)(1-e^{-ct}))
  return -1.0 / (std::expm1(t) * std::expm1(c * t) * -std::expm1(-c * t));
}

double barnes_kernel_regularized(double t, const ParameterC& c) {
  return regularized(t, c.value(), laurent_coefficients(c), kernel_series(c.value()));
}

double barnes_kernel_dc_regularized(double t, const ParameterC& c) {
  return regularized_dc(t, c.value(), kernel_series(c.value()));
}

double zeta_c_series(double s, const ParameterC& param, double abs_tol) {
  if (!(s >= 2.2) || !std::isfinite(s)) {
    throw DomainError("zeta_c_series: requires s >= 2.2, got " + std::to_string(s));
  }
  const double c = param.value();

  // Outer index ℓ: Σ_{ℓ<L} g(ℓ) + ∫_L^∞ g + ½ g(L) - Σ_k B_{2k}/(2k)! g^{(2k-1)}(L),
  // with g(ℓ) = Σ_n (cℓ + n)^{-s}, ∫_L^∞ g = Σ_n (cL+n)^{1-s} / (c(s-1)) and
  // g^{(m)}(ℓ) = (-c)^m s(s+1)…(s+m-1) Σ_n (cℓ+n)^{-s-m}.
  for (int size = 16; size <= 4096; size *= 2) {
    double remainder = 0.0;
    double sum = 0.0;
    for (int l = 1; l < size; ++l) sum += shifted_power_sum(s, c * l, size, &remainder);

    const double x = c * size;
    sum += shifted_power_sum(s - 1.0, x, size, &remainder) / (c * (s - 1.0));
    sum += 0.5 * shifted_power_sum(s, x, size, &remainder);

    constexpr int kCorrections = 6;
    double poch = s;  // s(s+1)…(s+2k-2)
    double cpow = c;  // c^{2k-1}
    for (int k = 1; k <= kCorrections; ++k) {
      const int m = 2 * k - 1;
      const double derivative = -cpow * poch * shifted_power_sum(s + m, x, size, &remainder);
      sum -= kBernoulli[2 * k] * inv_factorial(2 * k) * derivative;
      poch *= (s + m) * (s + m + 1);
      cpow *= c * c;
    }
    double dummy = 0.0;
    const int m = 2 * kCorrections + 1;
    remainder += std::abs(kBernoulli[2 * kCorrections + 2] * inv_factorial(2 * kCorrections + 2) *
                          cpow * poch * shifted_power_sum(s + m, x, size, &dummy));
    if (remainder <= abs_tol) return sum;
  }
  throw ConvergenceError("zeta_c_series: tail bound did not reach the requested tolerance");
}

Estimate zeta_c_integral_estimate(double s, const ParameterC& param, double abs_tol) {
  if (!(s > -1.0) || !std::isfinite(s)) {
    throw DomainError("zeta_c_integral: requires s > -1, got " + std::to_string(s));
  }
  require_not_pole(s);
  if (s == 0.0) return {zeta_c_at0(param), 0.0, 0};

  const double c = param.value();
  const LaurentCoefficients b = laurent_coefficients(param);
  const KernelSeries series = kernel_series(c);

  // t^{s-1} growth is absorbed by halving the exponential rate.
  const double rate = s > 1.0 ? 0.5 * (1.0 + c) : 1.0 + c;
  const QuadratureResult ray = integrate_to_infinity(
      [&](double t) { return std::pow(t, s - 1.0) * barnes_kernel(t, c); }, 1.0, rate,
      0.5 * abs_tol);
  // ∫_0^1 t^s R(t) dt with t = u².
  const QuadratureResult head = integrate_finite(
      [&](double u) {
        const double t = u * u;
        return 2.0 * std::pow(u, 2.0 * s + 1.0) * regularized(t, c, b, series);
      },
      0.0, 1.0, 0.5 * abs_tol);

  const double rgamma = reciprocal_gamma(s);
  const double poles = rgamma * (b.b_minus2 / (s - 2.0) + b.b_minus1 / (s - 1.0)) +
                       b.b_zero * std::exp(-log_gamma(s + 1.0));
  const Estimate integrals = ray.as_estimate() + head.as_estimate();
  return rgamma * integrals + poles;
}

double zeta_c_integral(double s, const ParameterC& c, double abs_tol) {
  return zeta_c_integral_estimate(s, c, abs_tol).value;
}

double zeta_c_at0(const ParameterC& c) { return laurent_coefficients(c).b_zero; }

Estimate zeta_c_prime0_estimate(const ParameterC& param, double abs_tol) {
  const double c = param.value();
  const LaurentCoefficients b = laurent_coefficients(param);
  const KernelSeries series = kernel_series(c);

  const QuadratureResult ray = integrate_to_infinity(
      [&](double t) { return barnes_kernel(t, c) / t; }, 1.0, 1.0 + c, 0.5 * abs_tol);
  const QuadratureResult head = integrate_finite(
      [&](double t) { return regularized(t, c, b, series); }, 0.0, 1.0, 0.5 * abs_tol);

  return ray.as_estimate() + head.as_estimate() +
         (-0.5 * b.b_minus2 - b.b_minus1 + b.b_zero * kEulerGamma);
}

double zeta_c_prime0(const ParameterC& c, double abs_tol) {
  return zeta_c_prime0_estimate(c, abs_tol).value;
}

Estimate dzeta_dc_integrals(const ParameterC& param, double abs_tol) {
  const double c = param.value();
  const KernelSeries series = kernel_series(c);
  const QuadratureResult ray = integrate_to_infinity(
      [&](double t) { return barnes_kernel_dc(t, c); }, 1.0, 1.0 + c, 0.5 * abs_tol);
  const QuadratureResult head = integrate_finite(
      [&](double t) { return regularized_dc(t, c, series); }, 0.0, 1.0, 0.5 * abs_tol);
  return ray.as_estimate() + head.as_estimate();
}

Estimate dzeta_c_prime0_dc_estimate(const ParameterC& param, double abs_tol) {
  const double c = param.value();
  return dzeta_dc_integrals(param, abs_tol) + kEulerGamma * (1.0 / 12.0 - 1.0 / (12.0 * c * c));
}

double dzeta_c_prime0_dc(const ParameterC& c, double abs_tol) {
  return dzeta_c_prime0_dc_estimate(c, abs_tol).value;
}

double dzeta_c_prime0_dc_integer(int j) {
  if (j < 1) throw DomainError("dzeta_c_prime0_dc_integer: j must be >= 1");
  const double jd = j;
  // The p = j term carries p(j - p) = 0.
  double weighted = 0.0;
  for (int p = 1; p < j; ++p) {
    weighted += static_cast<double>(p) * (j - p) * digamma_gauss(RationalArg(p, j));
  }
  return -1.0 / 12.0 - 1.0 / (8.0 * jd * jd) + (1.0 - jd * jd) / (12.0 * jd * jd) * std::log(jd) -
         weighted / (2.0 * jd * jd * jd);
}

double dzeta_c_at_s_integer(double s, int j) {
  if (j < 1) throw DomainError("dzeta_c_at_s_integer: j must be >= 1");
  if (!(s > -1.0) || !std::isfinite(s)) {
    throw DomainError("dzeta_c_at_s_integer: requires s > -1");
  }
  require_not_pole(s);
  const double jd = j;
  if (s == 0.0) return (jd * jd - 1.0) / (12.0 * jd * jd);

  double sum = 0.0;
  for (int p = 1; p <= j; ++p) {
    const double q = p / jd;
    sum += hurwitz_zeta(s - 1.0, q) + (j - 2.0 * p) / jd * hurwitz_zeta(s, q) -
           p * (j - p) / (jd * jd) * hurwitz_zeta(s + 1.0, q);
  }
  return -0.5 * s * std::pow(jd, -s - 1.0) * sum;
}

}  // namespace zvar
