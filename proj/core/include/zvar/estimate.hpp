#pragma once

#include <cstdint>

namespace zvar {

/// A computed value together with an absolute error estimate and the number of
/// integrand evaluations spent on it (zero for closed forms).
struct Estimate {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;

  friend Estimate operator+(const Estimate& a, const Estimate& b) {
    return {a.value + b.value, a.error_estimate + b.error_estimate, a.evaluations + b.evaluations};
  }
  friend Estimate operator-(const Estimate& a, const Estimate& b) {
    return {a.value - b.value, a.error_estimate + b.error_estimate, a.evaluations + b.evaluations};
  }
  friend Estimate operator*(double k, const Estimate& a) {
    return {k * a.value, (k < 0 ? -k : k) * a.error_estimate, a.evaluations};
  }
  friend Estimate operator+(const Estimate& a, double constant) {
    return {a.value + constant, a.error_estimate, a.evaluations};
  }
};

}  // namespace zvar
