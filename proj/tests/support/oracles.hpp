#pragma once

// Reference values and brute-force oracles shared by the unit and acceptance
// tests. Nothing here calls into the library under test except where a test
// explicitly composes it.

#include <cmath>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

namespace oracle {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

// ζ_R'(-1) and ζ_R'(0) (published constants).
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921391966024278;
inline constexpr double kZetaPrime0 = -0.91893853320467274178032973640562;

// Values computed once with mpmath at 40 significant digits from the defining
// formulas (Barnes derivative by direct quadrature of the differentiated
// kernel, variations by the three routes independently).
namespace frozen {
inline constexpr double kDzetaDc2 = -0.035185655491990947706849;
inline constexpr double kDzetaDc3 = -0.013776162278845355088582614;
inline constexpr double kDzetaDc5 = -0.018575500711808777770586;
struct Point {
  double c;
  double value;
};
inline constexpr Point kDxiDc[] = {
    {2.0, -0.0652953438051604314394},   {3.0, -0.0441342730120132445597},
    {4.0, -0.0403662711193663514255},   {7.0, -0.0463281479294547065478},
    {1.3, -0.128755075317250284998},    {1.5, -0.100699532092227333282},
    {2.5, -0.0506803084958486703497},   {3.25, -0.0423992871095584690847},
    {6.8, -0.0457444058810785644005},   {3.0001, -0.0441334211234473508760},
};
inline constexpr Point kResidueLemma[] = {
    {1.5, -0.0331572798108115282852}, {2.5, 0.0366968022949468410446},
    {4.75, 0.0192718754841287873940}};
inline constexpr Point kLogLemmaLhs[] = {
    {1.5, -0.0138974805540141336886}, {2.5, 0.0140325177967898991812},
    {4.75, 0.00697124978717481110687}};
}  // namespace frozen

/// Zero of f in [lo, hi] by bisection to machine resolution; f(lo), f(hi) differ in sign.
template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// n-th positive zero of J_0 by bisection on Boost's J_0 around (n - ¼)π.
inline double j0_zero_bisection(int n) {
  const double beta = (n - 0.25) * kPi;
  return bisect([](double x) { return boost::math::cyl_bessel_j(0, x); }, beta - 0.4, beta + 0.4);
}

/// Σ_{n<=count} λ_n^{-2s} plus the tail Σ_{n>count} ((n - ¼)π)^{-2s}
/// approximated by the midpoint integral from count + ½.
inline double xi0_zero_sum(double s, int count = 500) {
  double sum = 0.0;
  for (int n = 1; n <= count; ++n) sum += std::pow(j0_zero_bisection(n), -2.0 * s);
  const double a = 2.0 * s;
  const double x0 = count + 0.25;  // (count + ½) - ¼
  sum += std::pow(kPi, -a) * std::pow(x0, 1.0 - a) / (a - 1.0);
  return sum;
}

/// Composite Simpson rule on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace oracle
