#pragma once

namespace zvar {

/// J_0(x), x >= 0 (negative x is reflected). Power series up to the
/// crossover, Hankel asymptotic expansion beyond it.
double bessel_j0(double x);

/// J_1(x) with the same series/asymptotic split; used as -J_0'.
double bessel_j1(double x);

/// Series/asymptotic crossover for J_0 and J_1.
inline constexpr double kBesselCrossover = 12.0;

/// log I_0(z) - z + ½ log(2πz) for z >= 1. Tends to 1/(8z) as z → ∞.
double log_i0_regularized(double z);

/// I_1(z) / (z I_0(z)) = (d/dz log I_0(z)) / z for 0 <= z <= 2, by power series.
/// Smooth at the origin, where it equals ½.
double i1_over_z_i0(double z);

struct BesselZero {
  double order = 0.0;
  int index = 0;
  double value = 0.0;
};

/// n-th positive zero of J_0: McMahon start (n - ¼)π + 1/(8(n - ¼)π), then
/// Newton on J_0 with J_0' = -J_1.
BesselZero j0_zero(int n);

}  // namespace zvar
