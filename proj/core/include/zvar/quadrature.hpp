#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "zvar/estimate.hpp"

namespace zvar {

using Integrand = std::function<double(double)>;

/// Absolute tolerance used for every integral representation in the library.
inline constexpr double kDefaultAbsTol = 1e-12;

/// Panel budget for adaptive subdivision.
inline constexpr std::size_t kMaxPanels = 100000;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;

  Estimate as_estimate() const { return {value, error_estimate, evaluations}; }
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of f over [a, b].
///
/// The panel with the largest embedded error estimate |K15 - G7| is bisected
/// until the summed estimate falls to abs_tol. Throws ConvergenceError when
/// the panel budget runs out, DomainError for a non-finite integrand value or
/// invalid interval.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  double abs_tol = kDefaultAbsTol);

/// ∫_a^∞ f for |f(t)| <= C e^{-decay_rate (t - a)}.
///
/// C is inferred from samples of f on [a, a + 16/decay_rate]; the ray is cut at
/// the smallest T with C e^{-rate (T-a)} / rate < abs_tol / 10 and the finite
/// part is handed to integrate_finite. The tail bound is added to the reported
/// error.
QuadratureResult integrate_to_infinity(const Integrand& f, double a, double decay_rate,
                                       double abs_tol = kDefaultAbsTol);

/// ∫_ℝ f for an even f with |f(s)| <= C (1 + |s|) e^{-decay_rate |s|}.
/// Computed as 2 ∫_0^∞ f with the truncation rate halved to absorb the
/// polynomial prefactor.
QuadratureResult integrate_real_line_even(const Integrand& f, double decay_rate,
                                          double abs_tol = kDefaultAbsTol);

}  // namespace zvar
