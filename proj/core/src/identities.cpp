#include "zvar/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "zvar/barnes.hpp"
#include "zvar/bessel_zeta.hpp"
#include "zvar/errors.hpp"
#include "zvar/specfun.hpp"

namespace zvar {
namespace {

std::string label(const char* name, const char* key, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %s=%07.4f", name, key, x);
  return buf;
}

std::string label(const char* name, int j) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s j=%02d", name, j);
  return buf;
}

void require_integer_at_least_two(int j, const char* who) {
  if (j < 2) throw DomainError(std::string(who) + ": requires an integer >= 2");
}

// Σ_{k=1}^{K} log|sin(kπ/c)| / sin²(kπ/c), K = ⌈c/2 - 1⌉.
double half_range_log_sum(double c) {
  double sum = 0.0;
  const int top = static_cast<int>(std::ceil(0.5 * c - 1.0));
  for (int k = 1; k <= top; ++k) {
    const double sn = std::sin(k * kPi / c);
    sum += std::log(std::abs(sn)) / (sn * sn);
  }
  return sum;
}

// Σ over k = ⌈-c/2⌉..⌈c/2-1⌉, k ≠ 0 of (γ + log|sin(kπ/c)|)/(4π sin²(kπ/c)).
double window_sum(double c) {
  const int lo = static_cast<int>(std::ceil(-0.5 * c));
  const int hi = static_cast<int>(std::ceil(0.5 * c - 1.0));
  double sum = 0.0;
  for (int k = lo; k <= hi; ++k) {
    if (k == 0) continue;
    const double sn = std::sin(k * kPi / c);
    sum += (kEulerGamma + std::log(std::abs(sn))) / (4.0 * kPi * sn * sn);
  }
  return sum;
}

double sin_pi(double x) { return std::sin(kPi * std::remainder(x, 2.0)); }

double pick(const ToleranceProfile& p, double fallback) { return p.tolerance.value_or(fallback); }

template <class F>
void guarded(std::vector<IdentityReport>& out, const std::string& name, F&& check) {
  try {
    check();
  } catch (const Error& e) {
    IdentityReport r;
    r.name = name + " (" + e.what() + ")";
    r.lhs = r.rhs = r.abs_diff = std::nan("");
    out.push_back(std::move(r));
  }
}

void sort_by_name(std::vector<IdentityReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const IdentityReport& a, const IdentityReport& b) { return a.name < b.name; });
}

}  // namespace

IdentityReport make_report(std::string name, double lhs, double rhs, double tolerance) {
  const double diff = std::abs(lhs - rhs);
  return {std::move(name), lhs, rhs, diff, tolerance, diff <= tolerance};
}

IdentityReport check_cos_reformulation(double c, const std::vector<int>& k_set, double tolerance) {
  if (!(c > 0.0)) throw DomainError("check_cos_reformulation: requires c > 0");
  const double alpha = kPi / c;
  double lhs = 0.0;
  double rhs = 0.0;
  for (int k : k_set) {
    const double one_minus_cos = 1.0 - std::cos(2.0 * k * alpha);
    if (k == 0 || one_minus_cos < 1e-14) {
      throw SingularTermError("check_cos_reformulation: singular term at k = " + std::to_string(k));
    }
    const double sn = std::sin(k * alpha);
    lhs += (-2.0 * kEulerGamma + kLog2 - std::log(one_minus_cos)) / (4.0 * kPi * one_minus_cos);
    rhs -= (kEulerGamma + std::log(std::abs(sn))) / (4.0 * kPi * sn * sn);
  }
  return make_report(label("cos_reformulation", "c", c), lhs, rhs, tolerance);
}

IdentityReport check_window_fold(double c, double tolerance) {
  if (!(c > 0.0)) throw DomainError("check_window_fold: requires c > 0");
  const double half = 0.5 * c;
  if (std::abs(half - std::round(half)) <= kIntegerTolerance) {
    throw ClassificationError("check_window_fold: c must not be an even integer");
  }
  double rhs = 0.0;
  const int top = static_cast<int>(std::ceil(half - 1.0));
  for (int k = 1; k <= top; ++k) {
    const double sn = std::sin(k * kPi / c);
    rhs -= (kEulerGamma + std::log(sn)) / (2.0 * kPi * sn * sn);
  }
  return make_report(label("window_fold", "c", c), -window_sum(c), rhs, tolerance);
}

IdentityReport check_inverse_sin_squared(int c, double tolerance) {
  require_integer_at_least_two(c, "check_inverse_sin_squared");
  double lhs = 0.0;
  for (int k = 1; k < c; ++k) {
    const double sn = std::sin(k * kPi / c);
    lhs += 1.0 / (sn * sn);
  }
  return make_report(label("inverse_sin_squared", c), lhs, (c * c - 1.0) / 3.0, tolerance);
}

IdentityReport check_half_range_fold(int c, double tolerance) {
  require_integer_at_least_two(c, "check_half_range_fold");
  double rhs = 0.0;
  for (int k = 1; k < c; ++k) {
    const double sn = std::sin(k * kPi / c);
    rhs += std::log(sn) / (4.0 * kPi * sn * sn);
  }
  return make_report(label("half_range_fold", c), half_range_log_sum(c) / (2.0 * kPi), rhs,
                     tolerance);
}

IdentityReport check_integer_window(int c, double tolerance) {
  require_integer_at_least_two(c, "check_integer_window");
  const double cd = c;
  const double rhs =
      -kEulerGamma / (12.0 * kPi) * (cd * cd - 1.0) - half_range_log_sum(cd) / (2.0 * kPi);
  return make_report(label("integer_window", c), -window_sum(cd), rhs, tolerance);
}

IdentityReport check_digamma_trig(int j, DigammaSource source, double tolerance) {
  require_integer_at_least_two(j, "check_digamma_trig");
  const double jd = j;
  double lhs = 0.0;
  for (int p = 1; p < j; ++p) {
    const double psi = source == DigammaSource::gauss ? digamma_gauss(RationalArg(p, j))
                                                      : digamma(p / jd);
    lhs += p * (jd - p) * (std::log(2.0 * jd) + psi);
  }
  lhs /= 2.0 * kPi * jd;
  double log_sum = 0.0;
  for (int k = 1; k <= (j - 1) / 2; ++k) {
    const double sn = std::sin(k * kPi / jd);
    log_sum += std::log(sn) / (sn * sn);
  }
  const double rhs = -kEulerGamma / (12.0 * kPi) * (jd * jd - 1.0) - log_sum / (2.0 * kPi);
  const char* name = source == DigammaSource::gauss ? "digamma_trig/gauss" : "digamma_trig/generic";
  return make_report(label(name, j), lhs, rhs, tolerance);
}

IdentityReport check_cot_sum_vanishes(int j, double tolerance) {
  require_integer_at_least_two(j, "check_cot_sum_vanishes");
  double sum = 0.0;
  for (int p = 1; p < j; ++p) {
    const double x = p * kPi / j;
    sum += static_cast<double>(p) * (j - p) * std::cos(x) / std::sin(x);
  }
  return make_report(label("cot_sum_vanishes", j), sum, 0.0, tolerance);
}

IdentityReport check_cos_log_sum(int j, double tolerance) {
  require_integer_at_least_two(j, "check_cos_log_sum");
  const double jd = j;
  const int top = (j - 1) / 2;
  double lhs = 0.0;
  for (int p = 1; p < j; ++p) {
    double inner = 0.0;
    for (int k = 1; k <= top; ++k) {
      inner += std::cos(2.0 * k * p * kPi / jd) * std::log(std::sin(k * kPi / jd));
    }
    lhs += p * (jd - p) * inner;
  }
  lhs /= kPi * jd;
  double rhs = 0.0;
  for (int k = 1; k <= top; ++k) {
    const double sn = std::sin(k * kPi / jd);
    rhs -= std::log(sn) / (2.0 * kPi * sn * sn);
  }
  return make_report(label("cos_log_sum", j), lhs, rhs, tolerance);
}

std::vector<IdentityReport> check_weighted_cos_sums(int j, int k, double tolerance) {
  require_integer_at_least_two(j, "check_weighted_cos_sums");
  if (k < 1 || k > (j - 1) / 2) {
    throw DomainError("check_weighted_cos_sums: requires 1 <= k <= floor((j-1)/2)");
  }
  const double jd = j;
  double linear = 0.0;
  double quadratic = 0.0;
  double combined = 0.0;
  for (int p = 1; p < j; ++p) {
    const double cs = std::cos(2.0 * k * p * kPi / jd);
    linear += p * cs;
    quadratic += static_cast<double>(p) * p * cs;
    combined += p * (jd - p) * cs;
  }
  const double sn = std::sin(k * kPi / jd);
  const double inv = 1.0 / (sn * sn);
  char suffix[32];
  std::snprintf(suffix, sizeof suffix, " j=%02d k=%02d", j, k);
  return {
      make_report(std::string("weighted_cos/combined") + suffix, combined, -0.5 * jd * inv, tolerance),
      make_report(std::string("weighted_cos/linear") + suffix, linear, -0.5 * jd, tolerance),
      make_report(std::string("weighted_cos/quadratic") + suffix, quadratic,
                  0.5 * jd * inv - 0.5 * jd * jd, tolerance),
  };
}

IdentityReport check_residue_lemma(double c, double tolerance) {
  const Estimate integral = sector_kernel_integral(c, 0.1 * tolerance);
  const double lhs = c / (4.0 * kPi * kPi) * sin_pi(c) * integral.value;
  double rhs = (1.0 - c * c) / (12.0 * kPi);
  const int lo = static_cast<int>(std::ceil(-0.5 * c));
  const int hi = static_cast<int>(std::floor(0.5 * c));
  for (int n = lo; n <= hi; ++n) {
    if (n == 0) continue;
    rhs += 1.0 / (2.0 * kPi * (1.0 - std::cos(2.0 * kPi * n / c)));
  }
  return make_report(label("residue_lemma", "c", c), lhs, rhs, tolerance);
}

IdentityReport check_log_lemma(double c, double tolerance) {
  const Estimate integral = sector_log_kernel_integral(c, 0.1 * tolerance);
  const double lhs = c / (8.0 * kPi * kPi) * sin_pi(c) * integral.value;

  double residues = 0.0;
  for (int n = 1; n <= static_cast<int>(std::floor(0.5 * c)); ++n) {
    const double one_minus_cos = 1.0 - std::cos(2.0 * n * kPi / c);
    residues += std::log(one_minus_cos) / one_minus_cos;
  }
  // The t-integrals here use e^{ct}/((e^t-1)(1-e^{ct})²), the negative of the
  // Barnes derivative kernel, with the matching negated subtraction.
  const Estimate t_integrals = dzeta_dc_integrals(ParameterC(c), 0.1 * tolerance);
  const double bracket =
      kPi / (2.0 * c) + kPi * c / 3.0 + kLog2 * (kPi / (6.0 * c) - kPi * c / 6.0);
  const double rhs = residues / (2.0 * kPi) - c * c / kPi * t_integrals.value -
                     c / (4.0 * kPi * kPi) * bracket;
  return make_report(label("log_lemma", "c", c), lhs, rhs, tolerance);
}

ToleranceProfile ToleranceProfile::standard() {
  ToleranceProfile p;
  for (int j = 2; j <= 12; ++j) p.integers.push_back(j);
  p.nonintegers = {1.3, 1.5, 2.5, 3.25, 3.7, 4.75, 6.8};
  return p;
}

std::vector<IdentityReport> run_all(const ToleranceProfile& profile) {
  std::vector<IdentityReport> out;
  auto window = [](double c) {
    std::vector<int> ks;
    const int lo = static_cast<int>(std::ceil(-0.5 * c));
    const int hi = static_cast<int>(std::ceil(0.5 * c - 1.0));
    for (int k = lo; k <= hi; ++k) {
      if (k != 0) ks.push_back(k);
    }
    return ks;
  };

  for (int j : profile.integers) {
    const double c = j;
    guarded(out, label("cos_reformulation", "c", c),
            [&] { out.push_back(check_cos_reformulation(c, window(c), pick(profile, 1e-12))); });
    if (j % 2 == 1) {
      guarded(out, label("window_fold", "c", c),
              [&] { out.push_back(check_window_fold(c, pick(profile, 1e-12))); });
    }
    guarded(out, label("inverse_sin_squared", j),
            [&] { out.push_back(check_inverse_sin_squared(j, pick(profile, 1e-10))); });
    guarded(out, label("half_range_fold", j),
            [&] { out.push_back(check_half_range_fold(j, pick(profile, 1e-12))); });
    guarded(out, label("integer_window", j),
            [&] { out.push_back(check_integer_window(j, pick(profile, 1e-11))); });
    guarded(out, label("digamma_trig/gauss", j), [&] {
      out.push_back(check_digamma_trig(j, DigammaSource::gauss, pick(profile, 1e-11)));
    });
    guarded(out, label("digamma_trig/generic", j), [&] {
      out.push_back(check_digamma_trig(j, DigammaSource::generic, pick(profile, 1e-11)));
    });
    guarded(out, label("cot_sum_vanishes", j),
            [&] { out.push_back(check_cot_sum_vanishes(j, pick(profile, 1e-11))); });
    guarded(out, label("cos_log_sum", j),
            [&] { out.push_back(check_cos_log_sum(j, pick(profile, 1e-11))); });
    for (int k = 1; k <= (j - 1) / 2; ++k) {
      guarded(out, label("weighted_cos", j), [&] {
        for (auto& r : check_weighted_cos_sums(j, k, pick(profile, 1e-11))) out.push_back(std::move(r));
      });
    }
  }

  for (double c : profile.nonintegers) {
    guarded(out, label("cos_reformulation", "c", c),
            [&] { out.push_back(check_cos_reformulation(c, window(c), pick(profile, 1e-12))); });
    guarded(out, label("window_fold", "c", c),
            [&] { out.push_back(check_window_fold(c, pick(profile, 1e-12))); });
    guarded(out, label("residue_lemma", "c", c),
            [&] { out.push_back(check_residue_lemma(c, pick(profile, 1e-9))); });
    guarded(out, label("log_lemma", "c", c),
            [&] { out.push_back(check_log_lemma(c, pick(profile, 1e-8))); });
  }

  sort_by_name(out);
  return out;
}

std::vector<IdentityReport> run_cross_methods(const ToleranceProfile& profile) {
  std::vector<IdentityReport> out;
  const double qtol = profile.quadrature_tol;

  std::vector<int> barnes_js;
  if (!profile.integers.empty()) barnes_js.push_back(1);
  for (int j : profile.integers) {
    if (j > 1) barnes_js.push_back(j);
  }
  for (int j : barnes_js) {
    guarded(out, label("cross/barnes_dzeta_dc", j), [&] {
      out.push_back(make_report(label("cross/barnes_dzeta_dc", j),
                                dzeta_c_prime0_dc(ParameterC(j), qtol), dzeta_c_prime0_dc_integer(j),
                                pick(profile, 1e-9)));
    });
  }

  auto three_way = [&](double c, const VariationResult& a, const VariationResult& b,
                       const VariationResult& closed, double tol) {
    const auto name = [&](const char* pair) {
      return label((std::string("cross/dxi_dc/") + pair).c_str(), "c", c);
    };
    out.push_back(make_report(name("integral-sector"), a.value, b.value, tol));
    out.push_back(make_report(name("integral-closed"), a.value, closed.value, tol));
    out.push_back(make_report(name("sector-closed"), b.value, closed.value, tol));
  };

  for (int j : profile.integers) {
    if (j < 2) continue;
    guarded(out, label("cross/dxi_dc", "c", j), [&] {
      const ParameterC c(j);
      three_way(j, dxi_dc_integral(c, qtol), dxi_dc_sector(c, qtol), dxi_dc_closed_integer(j),
                pick(profile, 1e-9));
    });
  }

  std::vector<double> cs = profile.nonintegers;
  if (!cs.empty() && std::find(cs.begin(), cs.end(), 4.25) == cs.end()) cs.push_back(4.25);
  for (double cv : cs) {
    guarded(out, label("cross/dxi_dc", "c", cv), [&] {
      const ParameterC c(cv);
      three_way(cv, dxi_dc_integral(c, qtol), dxi_dc_sector(c, qtol),
                dxi_dc_closed_noninteger(c, qtol), pick(profile, 1e-8));
    });
  }

  if (!profile.integers.empty() || !profile.nonintegers.empty()) {
    guarded(out, "continuity", [&] {
      const double at3 = dxi_dc_closed_integer(3).value;
      for (double delta : {-1e-3, 1e-3}) {
        const double cv = 3.0 + delta;
        out.push_back(make_report(label("continuity/dxi_dc", "c", cv),
                                  dxi_dc_closed_noninteger(ParameterC(cv), qtol).value, at3,
                                  pick(profile, 1e-3)));
      }
    });
  }

  sort_by_name(out);
  return out;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

}  // namespace zvar
