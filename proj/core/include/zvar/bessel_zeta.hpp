#pragma once

// Bessel zeta functions. ξ_0(s) = Σ_n λ_{n,0}^{-2s} over the positive zeros of
// J_0, continued through the modified Bessel function I_0, and the
// c-variation of ξ_c'(0) where ξ_c collects the zeros of J_{cℓ}, ℓ >= 1.
// The variation is available by four routes that must agree:
//   integral           quadrature of the Barnes kernel derivative (any c > 0)
//   sector             residue sum plus sin(πc)-weighted real-line integral (c > 1)
//   closed_integer     trigonometric closed form for integer c >= 2
//   closed_noninteger  half-range log-sin sums plus one real-line integral (c > 1)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zvar/barnes.hpp"
#include "zvar/estimate.hpp"
#include "zvar/quadrature.hpp"

namespace zvar {

enum class Method { integral, sector, closed_integer, closed_noninteger };

std::string_view to_string(Method m);

/// Route selection for dxi_dc. `closed` picks the closed form matching the
/// classification of c; `automatic` does the same for c > 1 and falls back to
/// the integral route for c <= 1.
enum class Route { automatic, integral, sector, closed };

struct VariationResult {
  double c = 0.0;
  Method method = Method::integral;
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  std::optional<std::string> warning;
};

/// Opening angle α ∈ (0, π) of a circular sector and the matching c = π/α.
class SectorAngle {
 public:
  explicit SectorAngle(double alpha);
  static SectorAngle from_c(double c);

  double alpha() const noexcept { return alpha_; }
  double c() const noexcept { return c_; }

 private:
  SectorAngle(double alpha, double c) : alpha_(alpha), c_(c) {}
  double alpha_;
  double c_;
};

/// ξ_0(s) for s ∈ (-½, 1), s ≠ ½. ξ_0(0) = -¼.
Estimate xi0_estimate(double s, double abs_tol = kDefaultAbsTol);
double xi0(double s, double abs_tol = kDefaultAbsTol);

/// ξ_0'(0) = -½ log 2π.
double xi0_prime0();

/// ξ_c'(0) = ½[ζ_c'(0) + 5/(24c) - (c + 1/c) log 2 / 12].
Estimate xi_c_prime0_estimate(const ParameterC& c, double abs_tol = kDefaultAbsTol);
double xi_c_prime0(const ParameterC& c, double abs_tol = kDefaultAbsTol);

VariationResult dxi_dc_integral(const ParameterC& c, double abs_tol = kDefaultAbsTol);

/// Requires c > 1. For integer c the sin(πc) term is exactly zero and its
/// integral is not evaluated; within 0.02 of an integer otherwise, the result
/// carries a conditioning warning.
VariationResult dxi_dc_sector(const ParameterC& c, double abs_tol = kDefaultAbsTol);

/// Requires j >= 2.
VariationResult dxi_dc_closed_integer(int j);

/// Requires c > 1 and c not an integer (ClassificationError otherwise).
VariationResult dxi_dc_closed_noninteger(const ParameterC& c, double abs_tol = kDefaultAbsTol);

VariationResult dxi_dc(const ParameterC& c, Route route, double abs_tol = kDefaultAbsTol);

/// ∫_ℝ ds / ((1 + cosh s)(cosh cs - cos πc)) for non-integer c > 0.
Estimate sector_kernel_integral(double c, double abs_tol = kDefaultAbsTol);

/// ∫_ℝ log(1 + cosh s) ds / ((1 + cosh s)(cosh cs - cos πc)) for non-integer c > 0.
Estimate sector_log_kernel_integral(double c, double abs_tol = kDefaultAbsTol);

/// d/dα ζ'_{S_α}(0) = -(2c²/π) d/dc ξ_c'(0), using the chosen route for the variation.
double sector_variation(const SectorAngle& angle, Route route = Route::automatic,
                        double abs_tol = kDefaultAbsTol);

/// Chain-rule conversion of an already computed variation.
double sector_variation(const VariationResult& variation);

}  // namespace zvar
