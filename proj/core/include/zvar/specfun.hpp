#pragma once

// Real-valued special functions used throughout the library: log-gamma,
// digamma (generic and Gauss finite-sum form), Hurwitz and Riemann zeta, and
// the low-degree Bernoulli polynomials. Everything is binary64 and pure.

namespace zvar {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;
inline constexpr double kLog2Pi = 1.837877066409345483560659472811235279;

/// Euler–Mascheroni constant.
constexpr double euler_gamma() noexcept { return kEulerGamma; }

/// log Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ψ(x) = d/dx log Γ(x) for x > 0. Shifts upward to x >= 8, then uses the
/// asymptotic series through x^-12.
double digamma(double x);

/// A rational argument p/j with 1 <= p <= j.
class RationalArg {
 public:
  RationalArg(int numerator, int denominator);

  int numerator() const noexcept { return p_; }
  int denominator() const noexcept { return j_; }
  double value() const noexcept { return static_cast<double>(p_) / j_; }

 private:
  int p_;
  int j_;
};

/// ψ(p/j) by Gauss's finite trigonometric sum; requires p < j and j >= 2.
double digamma_gauss(const RationalArg& arg);

/// ζ_H(s; q) = Σ_{k>=0} (k+q)^{-s} for s in (-3, ∞) \ {1}, q > 0.
/// Euler–Maclaurin with a fixed number of direct terms and Bernoulli
/// corrections; see hurwitz_zeta_remainder_bound for the truncation error.
double hurwitz_zeta(double s, double q);

/// Magnitude of the first omitted Euler–Maclaurin term of hurwitz_zeta.
double hurwitz_zeta_remainder_bound(double s, double q);

/// Constant term of the Laurent expansion ζ_H(1+h; q) = 1/h + C + O(h), i.e. -ψ(q).
double hurwitz_constant_at_one(double q);

/// Bernoulli polynomial B_n(x), n in {1, 2}.
double bernoulli_poly(int n, double x);

/// ζ_R(s) = ζ_H(s; 1).
double riemann_zeta(double s);

}  // namespace zvar
