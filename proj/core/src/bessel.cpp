#include "zvar/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zvar/errors.hpp"
#include "zvar/specfun.hpp"

namespace zvar {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Σ_k (-1)^k (x/2)^{2k+ν} / (k! (k+ν)!) for ν in {0, 1}.
double j_series(int nu, double x) {
  const double y = 0.25 * x * x;
  double term = (nu == 0) ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -y / (static_cast<double>(k) * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && std::abs(term) < 1e-17) break;
  }
  return sum;
}

// Hankel expansion: J_ν(x) = sqrt(2/(πx)) (P cos χ - Q sin χ), χ = x - (ν/2 + ¼)π.
// Terms a_k = Π_{m<=k} (4ν² - (2m-1)²) / (k! 8^k x^k), summed to the smallest term.
double j_asymptotic(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag >= previous || mag < 1e-18) break;
    previous = mag;
    // k odd -> Q with sign (-1)^{(k-1)/2}; k even -> P with sign (-1)^{k/2}.
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? term : -term);
    } else {
      p += ((k / 2) % 2 == 0 ? term : -term);
    }
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);
  return x <= kBesselCrossover ? j_series(0, x) : j_asymptotic(0, x);
}

double bessel_j1(double x) {
  const double sign = x < 0.0 ? -1.0 : 1.0;
  x = std::abs(x);
  return sign * (x <= kBesselCrossover ? j_series(1, x) : j_asymptotic(1, x));
}

double log_i0_regularized(double z) {
  if (!(z >= 1.0) || !std::isfinite(z)) {
    throw DomainError("log_i0_regularized: need z >= 1, got " + std::to_string(z));
  }
  const double tail = 0.5 * (kLog2Pi + std::log(z));
  if (z <= 30.0) {
    const double y = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 400; ++k) {
      term *= y / (static_cast<double>(k) * k);
      sum += term;
      if (term < kEps * 1e-2 * sum) break;
    }
    return std::log(sum) - z + tail;
  }
  // e^{-z} sqrt(2πz) I_0(z) ~ Σ_k ((2k-1)!!)² / (k! (8z)^k)
  // log1p keeps R(z) ~ 1/(8z) accurate relative to itself for huge z.
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * k * z);
    if (next >= term || next < 1e-18 * sum) break;
    term = next;
    sum += term;
  }
  return std::log1p(sum);
}

double i1_over_z_i0(double z) {
  if (!(z >= 0.0) || z > 2.0) {
    throw DomainError("i1_over_z_i0: need 0 <= z <= 2");
  }
  const double y = 0.25 * z * z;
  double i0 = 1.0;
  double t0 = 1.0;
  double i1z = 0.5;  // I_1(z)/z
  double t1 = 0.5;
  for (int k = 1; k < 60; ++k) {
    t0 *= y / (static_cast<double>(k) * k);
    t1 *= y / (static_cast<double>(k) * (k + 1));
    i0 += t0;
    i1z += t1;
    if (t0 < 1e-18 && t1 < 1e-18) break;
  }
  return i1z / i0;
}

BesselZero j0_zero(int n) {
  if (n < 1) throw DomainError("j0_zero: index must be >= 1, got " + std::to_string(n));
  const double beta = (n - 0.25) * kPi;
  double x = beta + 1.0 / (8.0 * beta);
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    const double step = bessel_j0(x) / bessel_j1(x);
    // Past quadratic convergence the step only reflects rounding in J_0.
    if (std::abs(step) < 1e-9 * x && std::abs(step) >= std::abs(previous)) return {0.0, n, x};
    x += step;
    if (std::abs(step) <= 4.0 * kEps * x) return {0.0, n, x};
    previous = step;
  }
  throw ConvergenceError("j0_zero: Newton iteration did not converge for n = " +
                         std::to_string(n));
}

}  // namespace zvar
