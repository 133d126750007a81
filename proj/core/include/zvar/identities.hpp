#pragma once

// Numerical checks of the trigonometric, digamma and contour-integral
// identities that connect the variation formulas. Each check returns both
// sides and whether they agree within its tolerance.

#include <optional>
#include <string>
#include <vector>

#include "zvar/quadrature.hpp"

namespace zvar {

struct IdentityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Builds a report with abs_diff = |lhs - rhs| and pass = abs_diff <= tolerance.
IdentityReport make_report(std::string name, double lhs, double rhs, double tolerance);

/// Termwise 1 - cos 2θ = 2 sin²θ rewrite of the residue sum, α = π/c.
/// Throws SingularTermError when 1 - cos(2kα) < 1e-14 for some k.
IdentityReport check_cos_reformulation(double c, const std::vector<int>& k_set,
                                       double tolerance = 1e-12);

/// For c not an even integer the window ⌈-c/2⌉..⌈c/2-1⌉ (k ≠ 0) folds onto 1..⌈c/2-1⌉.
IdentityReport check_window_fold(double c, double tolerance = 1e-12);

/// Σ_{k=1}^{c-1} 1/sin²(kπ/c) = (c² - 1)/3.
IdentityReport check_inverse_sin_squared(int c, double tolerance = 1e-10);

/// Half-range form of Σ_{k=1}^{c-1} log|sin(kπ/c)| / (4π sin²(kπ/c)).
IdentityReport check_half_range_fold(int c, double tolerance = 1e-12);

/// Window sum of (γ + log|sin|)/(4π sin²) for integer c in closed form.
IdentityReport check_integer_window(int c, double tolerance = 1e-11);

enum class DigammaSource { gauss, generic };

/// (1/2πj) Σ p(j-p)(log 2j + ψ(p/j)) against the log-sin sum.
IdentityReport check_digamma_trig(int j, DigammaSource source = DigammaSource::gauss,
                                  double tolerance = 1e-11);

/// Σ_{p=1}^{j-1} p(j-p) cot(pπ/j) = 0.
IdentityReport check_cot_sum_vanishes(int j, double tolerance = 1e-11);

/// (1/πj) Σ_p p(j-p) Σ_k cos(2kpπ/j) log sin(kπ/j) against the log-sin sum.
IdentityReport check_cos_log_sum(int j, double tolerance = 1e-11);

/// Σ p cos(2kπp/j) = -j/2, Σ p² cos(2kπp/j) = j/(2 sin²(kπ/j)) - j²/2 and their
/// combination Σ p(j-p) cos(2kπp/j) = -j/(2 sin²(kπ/j)), 1 <= k <= ⌊(j-1)/2⌋.
std::vector<IdentityReport> check_weighted_cos_sums(int j, int k, double tolerance = 1e-11);

/// (c/4π²) sin(πc) ∫_ℝ ds/((1+cosh s)(cosh cs - cos πc)) against its residue sum.
IdentityReport check_residue_lemma(double c, double tolerance = 1e-9);

/// (c/8π²) sin(πc) ∫_ℝ log(1+cosh s) ds/((1+cosh s)(cosh cs - cos πc)) against
/// the log-residue sum, the Barnes t-integrals and the elementary bracket.
IdentityReport check_log_lemma(double c, double tolerance = 1e-8);

struct ToleranceProfile {
  /// Replaces every per-check tolerance when set.
  std::optional<double> tolerance;
  std::vector<int> integers;
  std::vector<double> nonintegers;
  /// Quadrature tolerance for the integral sides.
  double quadrature_tol = kDefaultAbsTol;

  /// Integers 2..12 and non-integers {1.3, 1.5, 2.5, 3.25, 3.7, 4.75, 6.8}.
  static ToleranceProfile standard();
};

/// Every identity over the profile's parameter sets, sorted by name.
std::vector<IdentityReport> run_all(const ToleranceProfile& profile = ToleranceProfile::standard());

/// Agreement between independent routes: Barnes quadrature vs closed form for
/// j = 1 and the profile integers, the variation routes pairwise for integers
/// (1e-9) and non-integers (1e-8, plus c = 4.25), and continuity at c = 3 ± 1e-3.
/// Sorted by name.
std::vector<IdentityReport> run_cross_methods(
    const ToleranceProfile& profile = ToleranceProfile::standard());

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace zvar
