#include "zvar/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zvar/errors.hpp"

namespace zvar {
namespace {

// B_2, B_4, ..., B_22.
constexpr std::array<double, 11> kBernoulliEven = {
    1.0 / 6.0,         -1.0 / 30.0,      1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,  7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0, 854513.0 / 138.0,
};

// Direct terms and Bernoulli corrections for the Hurwitz Euler–Maclaurin sum.
// With x = N + q >= 10 the first omitted term is below 1e-13 on (-3, ∞).
constexpr int kHurwitzDirectTerms = 10;
constexpr int kHurwitzCorrections = 10;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;

  // Shift to x >= 10 and apply Stirling's series.
  double shift = 1.0;
  while (x < 10.0) {
    shift *= x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double pow = inv;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulliEven[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pow;
    pow *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi + series - std::log(shift);
}

double digamma(double x) {
  require_positive(x, "digamma");
  double result = 0.0;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double pow = inv2;
  double tail = 0.0;
  for (int k = 1; k <= 8; ++k) {
    tail += kBernoulliEven[k - 1] / (2.0 * k) * pow;
    pow *= inv2;
  }
  return result + std::log(x) - 0.5 / x - tail;
}

RationalArg::RationalArg(int numerator, int denominator) : p_(numerator), j_(denominator) {
  if (j_ < 1 || p_ < 1 || p_ > j_) {
    throw DomainError("RationalArg: need 1 <= p <= j, got p=" + std::to_string(p_) +
                      ", j=" + std::to_string(j_));
  }
}

double digamma_gauss(const RationalArg& arg) {
  const int p = arg.numerator();
  const int j = arg.denominator();
  if (j < 2 || p >= j) {
    throw DomainError("digamma_gauss: need 1 <= p <= j-1 and j >= 2");
  }
  const double jd = j;
  double sum = 0.0;
  const int kmax = (j + 1) / 2 - 1;
  for (int k = 1; k <= kmax; ++k) {
    sum += std::cos(2.0 * k * p * kPi / jd) * std::log(std::sin(k * kPi / jd));
  }
  // cot(pπ/j) vanishes exactly when 2p = j.
  const double cot = (2 * p == j) ? 0.0 : 1.0 / std::tan(p * kPi / jd);
  return -kEulerGamma - std::log(2.0 * jd) - 0.5 * kPi * cot + 2.0 * sum;
}

double hurwitz_zeta(double s, double q) {
  require_positive(q, "hurwitz_zeta");
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (!(s > -3.0) || !std::isfinite(s)) {
    throw DomainError("hurwitz_zeta: supported range is s > -3, got " + std::to_string(s));
  }

  double sum = 0.0;
  for (int k = 0; k < kHurwitzDirectTerms; ++k) sum += std::pow(k + q, -s);

  const double x = kHurwitzDirectTerms + q;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);

  // Σ B_{2k}/(2k)! · s(s+1)…(s+2k-2) · x^{-s-2k+1}
  double poch = s;  // s(s+1)…(s+2k-2)
  double xpow = std::pow(x, -s - 1.0);
  const double inv2 = 1.0 / (x * x);
  for (int k = 1; k <= kHurwitzCorrections; ++k) {
    sum += kBernoulliEven[k - 1] / factorial(2 * k) * poch * xpow;
    poch *= (s + 2 * k - 1) * (s + 2 * k);
    xpow *= inv2;
  }
  return sum;
}

double hurwitz_zeta_remainder_bound(double s, double q) {
  require_positive(q, "hurwitz_zeta_remainder_bound");
  const int k = kHurwitzCorrections + 1;
  double poch = 1.0;
  for (int i = 0; i < 2 * k - 1; ++i) poch *= (s + i);
  const double x = kHurwitzDirectTerms + q;
  return std::abs(kBernoulliEven[k - 1] / factorial(2 * k) * poch *
                  std::pow(x, -s - 2.0 * k + 1.0));
}

double hurwitz_constant_at_one(double q) {
  require_positive(q, "hurwitz_constant_at_one");
  return -digamma(q);
}

double bernoulli_poly(int n, double x) {
  switch (n) {
    case 1:
      return x - 0.5;
    case 2:
      return x * x - x + 1.0 / 6.0;
    default:
      throw DomainError("bernoulli_poly: unsupported degree " + std::to_string(n));
  }
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

}  // namespace zvar
