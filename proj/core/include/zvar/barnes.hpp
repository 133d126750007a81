#pragma once

// The Barnes-type double zeta function
//
//   ζ_c(s) = Σ_{n,ℓ>=1} (cℓ + n)^{-s},   c > 0,
//
// its continuation to s > -1 through the Mellin representation with the
// small-t Laurent part subtracted, the value and derivative at s = 0, and the
// c-derivative of ζ_c'(0) by quadrature and (for integer c) in closed form.

#include "zvar/estimate.hpp"
#include "zvar/quadrature.hpp"

namespace zvar {

/// |c - round(c)| at or below this classifies c as an integer.
inline constexpr double kIntegerTolerance = 1e-9;

/// The positive parameter c, classified as integer or non-integer.
class ParameterC {
 public:
  explicit ParameterC(double c);

  double value() const noexcept { return c_; }
  bool is_integer() const noexcept { return integer_; }
  /// Nearest integer to c (meaningful for every c, not only integers).
  long nearest_integer() const noexcept { return nearest_; }

 private:
  double c_;
  long nearest_;
  bool integer_;
};

/// Coefficients of 1/((e^{ct}-1)(e^t-1)) = b_{-2}/t² + b_{-1}/t + b_0 + O(t).
struct LaurentCoefficients {
  double b_minus2 = 0.0;
  double b_minus1 = 0.0;
  double b_zero = 0.0;
  double c = 0.0;
};

LaurentCoefficients laurent_coefficients(const ParameterC& c);

/// Reference value of ζ_c(s) for s >= 2.2 by direct double summation with
/// Euler–Maclaurin tails in both indices. Independent of hurwitz_zeta.
double zeta_c_series(double s, const ParameterC& c, double abs_tol = 1e-12);

/// ζ_c(s) for s > -1, s not in {1, 2}, through the three-piece Mellin
/// representation. At s = 0 returns zeta_c_at0.
Estimate zeta_c_integral_estimate(double s, const ParameterC& c,
                                  double abs_tol = kDefaultAbsTol);
double zeta_c_integral(double s, const ParameterC& c, double abs_tol = kDefaultAbsTol);

/// ζ_c(0) = b_0(c).
double zeta_c_at0(const ParameterC& c);

/// ζ_c'(0).
Estimate zeta_c_prime0_estimate(const ParameterC& c, double abs_tol = kDefaultAbsTol);
double zeta_c_prime0(const ParameterC& c, double abs_tol = kDefaultAbsTol);

/// d/dc ζ_c'(0) from the differentiated representation.
Estimate dzeta_c_prime0_dc_estimate(const ParameterC& c, double abs_tol = kDefaultAbsTol);
double dzeta_c_prime0_dc(const ParameterC& c, double abs_tol = kDefaultAbsTol);

/// d/dc ζ_c'(0) at c = j via the digamma closed form.
double dzeta_c_prime0_dc_integer(int j);

/// d/dc ζ_c(s) at c = j through Hurwitz zeta values, s in (-1, ∞) \ {1, 2}.
/// At s = 0 returns the limit (j² - 1)/(12 j²).
double dzeta_c_at_s_integer(double s, int j);

// Kernels of the integral representations, exposed for the identity checks
// and tests. Small-t evaluations switch to the Taylor series of
// (x/(e^x-1)) (y/(e^y-1)) to avoid cancellation.

/// 1/((e^{ct}-1)(e^t-1)), t > 0.
double barnes_kernel(double t, double c);

/// (kernel - b_{-2}/t² - b_{-1}/t - b_0) / t, bounded on (0, 1].
double barnes_kernel_regularized(double t, const ParameterC& c);

/// -e^{ct}/((e^t-1)(e^{ct}-1)²) = (d/dc kernel) / t, t > 0.
double barnes_kernel_dc(double t, double c);

/// (t·barnes_kernel_dc + 1/(c²t²) - 1/(2c²t) - 1/12 + 1/(12c²)) / t, bounded on (0, 1].
double barnes_kernel_dc_regularized(double t, const ParameterC& c);

/// ∫_1^∞ barnes_kernel_dc + ∫_0^1 barnes_kernel_dc_regularized, the two
/// integrals of d/dc ζ_c'(0).
Estimate dzeta_dc_integrals(const ParameterC& c, double abs_tol = kDefaultAbsTol);

}  // namespace zvar
