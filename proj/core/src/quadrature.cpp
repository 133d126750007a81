#include "zvar/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "zvar/errors.hpp"

namespace zvar {
namespace {

// Kronrod nodes on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool splittable;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    // Unsplittable panels sink to the bottom so they are never popped first.
    if (x.splittable != y.splittable) return !x.splittable;
    return x.error < y.error;
  }
};

double checked(const Integrand& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    throw DomainError("integrand is not finite at t = " + std::to_string(t));
  }
  return v;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon() *
                           std::max(1.0, std::abs(center));
  return {a, b, kronrod, std::abs(kronrod - gauss), (b - a) > min_width};
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double abs_tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite: need finite a < b");
  }
  if (!(abs_tol > 0.0)) throw DomainError("integrate_finite: abs_tol must be > 0");

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  panels.push(gauss_kronrod(f, a, b));
  std::int64_t evaluations = 15;
  double total_error = panels.top().error;

  while (total_error > abs_tol) {
    if (panels.size() >= kMaxPanels) {
      throw ConvergenceError("integrate_finite: panel budget exhausted with error estimate " +
                             std::to_string(total_error));
    }
    Panel worst = panels.top();
    if (!worst.splittable) {
      throw ConvergenceError("integrate_finite: panels at resolution limit with error estimate " +
                             std::to_string(total_error));
    }
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    // Recompute occasionally to stop drift of the running sum.
    if (panels.size() % 1024 == 0) {
      total_error = 0.0;
      auto copy = panels;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }

  std::vector<Panel> done;
  done.reserve(panels.size());
  while (!panels.empty()) {
    done.push_back(panels.top());
    panels.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : done) {
    value += p.value;
    error += p.error;
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, double decay_rate,
                                       double abs_tol) {
  if (!(decay_rate > 0.0)) throw DomainError("integrate_to_infinity: decay_rate must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("integrate_to_infinity: abs_tol must be > 0");

  constexpr int kProbes = 16;
  const double spacing = 1.0 / decay_rate;
  double bound = 0.0;
  for (int i = 0; i < kProbes; ++i) {
    const double t = a + i * spacing;
    bound = std::max(bound, std::abs(checked(f, t)) * std::exp(i));
  }

  double length = kProbes * spacing;
  if (bound > 0.0) {
    length = std::max(spacing, std::log(10.0 * bound / (decay_rate * abs_tol)) / decay_rate);
  }
  const double tail = bound * std::exp(-decay_rate * length) / decay_rate;

  QuadratureResult finite = integrate_finite(f, a, a + length, 0.9 * abs_tol);
  finite.error_estimate += tail;
  finite.evaluations += kProbes;
  return finite;
}

QuadratureResult integrate_real_line_even(const Integrand& f, double decay_rate,
                                          double abs_tol) {
  QuadratureResult half = integrate_to_infinity(f, 0.0, 0.5 * decay_rate, 0.5 * abs_tol);
  return {2.0 * half.value, 2.0 * half.error_estimate, half.evaluations};
}

}  // namespace zvar
