#include "zvar/bessel_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zvar/bessel.hpp"
#include "zvar/errors.hpp"
#include "zvar/specfun.hpp"

namespace zvar {
namespace {

constexpr double kConditioningBand = 0.02;

void require_above_one(const ParameterC& c, const char* who) {
  if (!(c.value() > 1.0)) {
    throw DomainError(std::string(who) + ": requires c > 1, got " + std::to_string(c.value()));
  }
}

// (1 + cosh s)(cosh cs - cos πc) written as 2cosh²(s/2) · 2(sinh²(cs/2) + sin²(πc/2))
// so that nothing cancels when c is close to an even integer.
double sector_denominator(double s, double c, double sin_half) {
  const double ch = std::cosh(0.5 * s);
  const double sh = std::sinh(0.5 * c * s);
  return 4.0 * ch * ch * (sh * sh + sin_half * sin_half);
}

double log_one_plus_cosh(double s) {
  const double a = std::abs(s);
  // 1 + cosh s = e^{|s|} (1 + e^{-|s|})² / 2
  return a + 2.0 * std::log1p(std::exp(-a)) - kLog2;
}

// sin(πc) and sin(πc/2) with the argument reduced first.
double sin_pi(double x) { return std::sin(kPi * std::remainder(x, 2.0)); }

void require_noninteger(double c, const char* who) {
  if (!(c > 0.0)) throw DomainError(std::string(who) + ": requires c > 0");
  if (ParameterC(c).is_integer()) {
    throw ClassificationError(std::string(who) + ": c = " + std::to_string(c) +
                              " classifies as an integer");
  }
}

VariationResult make_result(double c, Method m, const Estimate& e) {
  return {c, m, e.value, e.error_estimate, e.evaluations, std::nullopt};
}

// ⌈c/2 - 1⌉, the upper end of every half-range sum.
int half_range(double c) { return static_cast<int>(std::ceil(0.5 * c - 1.0)); }

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::integral: return "integral";
    case Method::sector: return "sector";
    case Method::closed_integer: return "closed_integer";
    case Method::closed_noninteger: return "closed_noninteger";
  }
  return "unknown";
}

SectorAngle::SectorAngle(double alpha) : alpha_(alpha), c_(kPi / alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw DomainError("SectorAngle: alpha must lie in (0, pi), got " + std::to_string(alpha));
  }
}

SectorAngle SectorAngle::from_c(double c) {
  if (!(c > 1.0) || !std::isfinite(c)) {
    throw DomainError("SectorAngle: c must exceed 1, got " + std::to_string(c));
  }
  return SectorAngle(kPi / c, c);
}

Estimate xi0_estimate(double s, double abs_tol) {
  if (!(s > -0.5 && s < 1.0)) {
    throw DomainError("xi0: s must lie in (-1/2, 1), got " + std::to_string(s));
  }
  if (s == 0.5) throw PoleError("xi0: pole at s = 1/2");
  if (s == 0.0) return {-0.25, 0.0, 0};

  // ∫_0^1 z^{-2s} I_1/I_0 dz with w = z^{2-2s}.
  const double p = 2.0 - 2.0 * s;
  const QuadratureResult head = integrate_finite(
      [&](double w) { return i1_over_z_i0(std::pow(w, 1.0 / p)) / p; }, 0.0, 1.0, 0.25 * abs_tol);

  // ∫_1^∞ z^{-2s-1} R(z) dz with z = 1/u, then v = u^{2s+1}.
  const double q = 2.0 * s + 1.0;
  const QuadratureResult tail = integrate_finite(
      [&](double v) {
        const double u = std::pow(v, 1.0 / q);
        return log_i0_regularized(1.0 / u) / (u * q);
      },
      0.0, 1.0, 0.25 * abs_tol / std::max(1.0, 2.0 * std::abs(s)));

  const double constant = -log_i0_regularized(1.0);
  const double prefactor = std::sin(kPi * s) / kPi;
  const double bracket = head.value + constant + 2.0 * s * tail.value + 1.0 / (2.0 * s - 1.0);
  const double value = prefactor * bracket - std::sin(kPi * s) / (4.0 * kPi * s);
  const double error = std::abs(prefactor) * (head.error_estimate + 2.0 * std::abs(s) * tail.error_estimate);
  return {value, error, head.evaluations + tail.evaluations};
}

double xi0(double s, double abs_tol) { return xi0_estimate(s, abs_tol).value; }

double xi0_prime0() { return -0.5 * kLog2Pi; }

Estimate xi_c_prime0_estimate(const ParameterC& param, double abs_tol) {
  const double c = param.value();
  const Estimate z = zeta_c_prime0_estimate(param, abs_tol);
  return 0.5 * (z + (5.0 / (24.0 * c) - (c + 1.0 / c) * kLog2 / 12.0));
}

double xi_c_prime0(const ParameterC& c, double abs_tol) {
  return xi_c_prime0_estimate(c, abs_tol).value;
}

Estimate sector_kernel_integral(double c, double abs_tol) {
  require_noninteger(c, "sector_kernel_integral");
  const double sin_half = sin_pi(0.5 * c);
  const QuadratureResult r = integrate_real_line_even(
      [&](double s) { return 1.0 / sector_denominator(s, c, sin_half); }, 1.0 + c, abs_tol);
  return r.as_estimate();
}

Estimate sector_log_kernel_integral(double c, double abs_tol) {
  require_noninteger(c, "sector_log_kernel_integral");
  const double sin_half = sin_pi(0.5 * c);
  const QuadratureResult r = integrate_real_line_even(
      [&](double s) { return log_one_plus_cosh(s) / sector_denominator(s, c, sin_half); }, 1.0 + c,
      abs_tol);
  return r.as_estimate();
}

VariationResult dxi_dc_integral(const ParameterC& param, double abs_tol) {
  const double c = param.value();
  const double c2 = c * c;
  const Estimate integrals = dzeta_dc_integrals(param, abs_tol);
  const double elementary = 0.5 * kEulerGamma * (1.0 / 12.0 - 1.0 / (12.0 * c2)) -
                            5.0 / (48.0 * c2) - (1.0 - 1.0 / c2) * kLog2 / 24.0;
  return make_result(c, Method::integral, 0.5 * integrals + elementary);
}

VariationResult dxi_dc_sector(const ParameterC& param, double abs_tol) {
  require_above_one(param, "dxi_dc_sector");
  const double c = param.value();
  const double envelope = -kPi / (2.0 * c * c);

  double residues = 1.0 / (3.0 * kPi) + c * c / (12.0 * kPi);
  const int lo = static_cast<int>(std::ceil(-0.5 * c));
  const int hi = half_range(c);
  for (int k = lo; k <= hi; ++k) {
    if (k == 0) continue;
    const double one_minus_cos = 1.0 - std::cos(2.0 * k * kPi / c);
    residues += (-2.0 * kEulerGamma + kLog2 - std::log(one_minus_cos)) / (4.0 * kPi * one_minus_cos);
  }

  VariationResult out{c, Method::sector, envelope * residues, 0.0, 0, std::nullopt};
  if (param.is_integer()) return out;

  // -(π/2c²)(2c/π) sin(πc) ∫ (2γ - log 2 + log(1+cosh s)) / (16π (1+cosh s)(cosh cs - cos πc))
  const Estimate plain = sector_kernel_integral(c, 0.5 * abs_tol);
  const Estimate logged = sector_log_kernel_integral(c, 0.5 * abs_tol);
  const double weight = -sin_pi(c) / (16.0 * kPi * c);
  const Estimate integral = (2.0 * kEulerGamma - kLog2) * plain + logged;
  out.value += weight * integral.value;
  out.error_estimate = std::abs(weight) * integral.error_estimate;
  out.evaluations = integral.evaluations;

  const double distance = std::abs(c - static_cast<double>(param.nearest_integer()));
  if (distance < kConditioningBand) {
    out.warning = "c is within " + std::to_string(kConditioningBand) +
                  " of an integer; sin(pi c) multiplies a large integral";
  }
  return out;
}

VariationResult dxi_dc_closed_integer(int j) {
  if (j < 2) throw DomainError("dxi_dc_closed_integer: requires j >= 2");
  const double c = j;
  double log_sum = 0.0;
  for (int k = 1; k <= half_range(c); ++k) {
    const double sn = std::sin(k * kPi / c);
    log_sum += std::log(sn) / (sn * sn);
  }
  const double bracket = 1.0 / (3.0 * kPi) + c * c / (12.0 * kPi) -
                         kEulerGamma / (12.0 * kPi) * (c * c - 1.0) - log_sum / (2.0 * kPi);
  return {c, Method::closed_integer, -kPi / (2.0 * c * c) * bracket, 0.0, 0, std::nullopt};
}

VariationResult dxi_dc_closed_noninteger(const ParameterC& param, double abs_tol) {
  require_above_one(param, "dxi_dc_closed_noninteger");
  const double c = param.value();
  if (param.is_integer()) {
    throw ClassificationError("dxi_dc_closed_noninteger: c = " + std::to_string(c) +
                              " classifies as an integer");
  }
  const double c2 = c * c;
  const double shift = kLog2 - 2.0 * kEulerGamma;

  double log_sum = 0.0;  // Σ (γ + log sin)/sin²
  double inv_sum = 0.0;  // Σ 1/sin²
  for (int k = 1; k <= half_range(c); ++k) {
    const double sn = std::sin(k * kPi / c);
    const double inv = 1.0 / (sn * sn);
    log_sum += (kEulerGamma + std::log(sn)) * inv;
    inv_sum += inv;
  }

  const Estimate logged = sector_log_kernel_integral(c, abs_tol);
  const double weight = -sin_pi(c) / (16.0 * kPi * c);
  const double closed = -1.0 / (6.0 * c2) - 1.0 / 24.0 + log_sum / (4.0 * c2) +
                        shift * (1.0 - c2) / (48.0 * c2) + shift * inv_sum / (8.0 * c2);
  return make_result(c, Method::closed_noninteger, weight * logged + closed);
}

VariationResult dxi_dc(const ParameterC& c, Route route, double abs_tol) {
  switch (route) {
    case Route::integral: return dxi_dc_integral(c, abs_tol);
    case Route::sector: return dxi_dc_sector(c, abs_tol);
    case Route::automatic:
      if (!(c.value() > 1.0)) return dxi_dc_integral(c, abs_tol);
      [[fallthrough]];
    case Route::closed:
      if (c.is_integer()) {
        if (c.nearest_integer() < 2) throw DomainError("dxi_dc: closed form requires c > 1");
        return dxi_dc_closed_integer(static_cast<int>(c.nearest_integer()));
      }
      return dxi_dc_closed_noninteger(c, abs_tol);
  }
  throw DomainError("dxi_dc: unknown route");
}

double sector_variation(const VariationResult& v) {
  return -2.0 * v.c * v.c / kPi * v.value;
}

double sector_variation(const SectorAngle& angle, Route route, double abs_tol) {
  return sector_variation(dxi_dc(ParameterC(angle.c()), route, abs_tol));
}

}  // namespace zvar
