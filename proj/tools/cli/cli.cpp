#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zvar/barnes.hpp"
#include "zvar/bessel.hpp"
#include "zvar/bessel_zeta.hpp"
#include "zvar/errors.hpp"
#include "zvar/identities.hpp"
#include "zvar/specfun.hpp"

namespace zvar::cli {
namespace {

const std::vector<std::string> kQuantities = {"zeta-c-prime0", "dzeta-dc",        "zeta-c-at0",
                                              "xi-c-prime0",   "dxi-dc",          "xi0",
                                              "sector-variation"};
const std::vector<std::string> kMethods = {"auto", "integral", "sector", "closed"};

void require_method(const Query& q, std::initializer_list<const char*> allowed) {
  for (const char* m : allowed) {
    if (q.method == m) return;
  }
  throw UsageError("method '" + q.method + "' is not available for " + q.quantity);
}

double require_c(const Query& q) {
  if (!q.c) throw UsageError(q.quantity + " needs --c");
  return *q.c;
}

Record base(const Query& q) {
  Record r;
  r.quantity = q.quantity;
  r.c = q.c;
  r.s = q.s;
  return r;
}

Record fill(Record r, std::string method, const Estimate& e) {
  r.method = std::move(method);
  r.value = e.value;
  r.error_estimate = e.error_estimate;
  r.evaluations = e.evaluations;
  return r;
}

Route route_of(const std::string& method) {
  if (method == "integral") return Route::integral;
  if (method == "sector") return Route::sector;
  if (method == "closed") return Route::closed;
  return Route::automatic;
}

Record from_variation(Record r, const VariationResult& v) {
  r.method = std::string(to_string(v.method));
  r.value = v.value;
  r.error_estimate = v.error_estimate;
  r.evaluations = v.evaluations;
  return r;
}

// Validates method/quantity compatibility without evaluating anything.
void validate(const Query& q) {
  if (std::find(kQuantities.begin(), kQuantities.end(), q.quantity) == kQuantities.end()) {
    throw UsageError("unknown quantity '" + q.quantity + "'");
  }
  if (q.quantity == "zeta-c-prime0" || q.quantity == "xi-c-prime0" || q.quantity == "xi0") {
    require_method(q, {"auto", "integral"});
  } else if (q.quantity == "zeta-c-at0") {
    require_method(q, {"auto", "closed"});
  } else if (q.quantity == "dzeta-dc") {
    require_method(q, {"auto", "integral", "closed"});
  }
  if (!(q.tol > 0.0)) throw UsageError("--tol must be positive");
}

std::vector<Record> evaluate_grid(const std::vector<Query>& queries, unsigned jobs) {
  std::vector<Record> rows(queries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      try {
        rows[i] = evaluate(queries[i]);
      } catch (const std::exception& e) {
        Record r = base(queries[i]);
        r.method = queries[i].method;
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.error_estimate = std::numeric_limits<double>::quiet_NaN();
        r.ok = false;
        rows[i] = r;
        std::fprintf(stderr, "%s at %s: %s\n", queries[i].quantity.c_str(),
                     format_number(queries[i].c.value_or(queries[i].s.value_or(0.0))).c_str(),
                     e.what());
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(queries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ZVAR_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

void print_report(const IdentityReport& r, std::ostream& out) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s  %-48s lhs=%-24.17g rhs=%-24.17g diff=%.3e tol=%.1e\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.lhs, r.rhs, r.abs_diff, r.tolerance);
  out << buf;
}

}  // namespace

Record evaluate(const Query& q) {
  validate(q);
  Record r = base(q);
  const std::string& k = q.quantity;

  if (k == "xi0") {
    if (!q.s) throw UsageError("xi0 needs --s");
    r.c.reset();
    return fill(r, "integral", xi0_estimate(*q.s, q.tol));
  }
  r.s.reset();
  const ParameterC c(require_c(q));

  if (k == "zeta-c-prime0") return fill(r, "integral", zeta_c_prime0_estimate(c, q.tol));
  if (k == "zeta-c-at0") return fill(r, "closed", {zeta_c_at0(c), 0.0, 0});
  if (k == "xi-c-prime0") return fill(r, "integral", xi_c_prime0_estimate(c, q.tol));
  if (k == "dzeta-dc") {
    const bool closed = q.method == "closed" || (q.method == "auto" && c.is_integer());
    if (!closed) return fill(r, "integral", dzeta_c_prime0_dc_estimate(c, q.tol));
    if (!c.is_integer()) {
      throw ClassificationError("dzeta-dc closed form needs an integer c");
    }
    return fill(r, "closed_integer",
                {dzeta_c_prime0_dc_integer(static_cast<int>(c.nearest_integer())), 0.0, 0});
  }
  if (k == "dxi-dc") return from_variation(r, dxi_dc(c, route_of(q.method), q.tol));

  // sector-variation
  const SectorAngle angle = SectorAngle::from_c(c.value());
  const VariationResult v = dxi_dc(c, route_of(q.method), q.tol);
  Record out = from_variation(r, v);
  const double scale = 2.0 * angle.c() * angle.c() / kPi;
  out.value = sector_variation(v);
  out.error_estimate = scale * v.error_estimate;
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barnes and Bessel zeta functions: values, c-variations and identity checks", "zvar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zvar 0.1.0");

  Query q;
  std::string format = "json";
  std::string out_path;

  auto* compute = app.add_subcommand("compute", "Evaluate one quantity");
  compute->add_option("--quantity", q.quantity, "Quantity to evaluate")
      ->required()
      ->check(CLI::IsMember(kQuantities));
  compute->add_option("--c", q.c, "Parameter c > 0");
  compute->add_option("--s", q.s, "Spectral parameter (xi0)");
  compute->add_option("--method", q.method, "auto, integral, sector or closed")
      ->check(CLI::IsMember(kMethods));
  compute->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--tol", q.tol, "Absolute quadrature tolerance");
  compute->add_option("--out", out_path, "Write output to FILE");

  std::string suite = "all";
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify", "Run identity and cross-method checks");
  verify->add_option("--suite", suite, "all, identities or cross-methods")
      ->check(CLI::IsMember({"all", "identities", "cross-methods"}));
  verify->add_option("--tol", verify_tol, "Override every check tolerance")
      ->check(CLI::PositiveNumber);

  double c_min = 0.0, c_max = 0.0, step = 0.0;
  unsigned jobs = default_jobs();
  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity over a c-grid");
  sweep->add_option("--quantity", q.quantity, "Quantity to evaluate")
      ->required()
      ->check(CLI::IsMember(kQuantities));
  sweep->add_option("--c-min", c_min, "First grid point (s for xi0)")->required();
  sweep->add_option("--c-max", c_max, "Last grid point (s for xi0)")->required();
  sweep->add_option("--step", step, "Grid spacing")->required();
  sweep->add_option("--method", q.method, "auto, integral, sector or closed")
      ->check(CLI::IsMember(kMethods));
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--tol", q.tol, "Absolute quadrature tolerance");
  sweep->add_option("--jobs", jobs, "Worker threads (default ZVAR_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "Write output to FILE");

  int count = 0;
  auto* zeros = app.add_subcommand("zeros", "Positive zeros of J_0");
  zeros->add_option("--count", count, "Number of zeros")->required();
  zeros->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  zeros->add_option("--out", out_path, "Write output to FILE");
  zeros->callback([&] {
    if (!zeros->count("--format")) format = "csv";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      const Record r = evaluate(q);
      const std::string text =
          format == "csv" ? std::string(kCsvHeader) + "\n" + to_csv(r) + "\n" : to_json(r) + "\n";
      return emit(text, out_path, out, err);
    }

    if (*verify) {
      ToleranceProfile profile = ToleranceProfile::standard();
      profile.tolerance = verify_tol;
      std::vector<IdentityReport> reports;
      if (suite != "cross-methods") reports = run_all(profile);
      if (suite != "identities") {
        auto cross = run_cross_methods(profile);
        reports.insert(reports.end(), cross.begin(), cross.end());
      }
      std::size_t failed = 0;
      for (const auto& r : reports) {
        print_report(r, out);
        failed += r.pass ? 0 : 1;
      }
      out << "summary: " << reports.size() - failed << " passed, " << failed << " failed\n";
      return failed == 0 ? kOk : kVerifyFailed;
    }

    if (*sweep) {
      if (!(step > 0.0) || !(c_min <= c_max)) {
        throw UsageError("sweep needs c-min <= c-max and step > 0");
      }
      validate(q);
      const auto points = static_cast<std::size_t>(std::floor((c_max - c_min) / step + 1e-9)) + 1;
      std::vector<Query> grid(points, q);
      for (std::size_t i = 0; i < points; ++i) {
        // Snap to 12 decimals so that grid points like 1.1 + 9 * 0.1 print as 2.
        const double x = std::round((c_min + static_cast<double>(i) * step) * 1e12) / 1e12;
        if (q.quantity == "xi0") {
          grid[i].s = x;
        } else {
          grid[i].c = x;
        }
      }
      const std::vector<Record> rows = evaluate_grid(grid, jobs);
      const int status = emit(render(rows, format == "csv"), out_path, out, err);
      if (status != kOk) return status;
      const bool all_ok =
          std::all_of(rows.begin(), rows.end(), [](const Record& r) { return r.ok; });
      return all_ok ? kOk : kVerifyFailed;
    }

    if (*zeros) {
      if (count < 1) throw UsageError("--count must be at least 1");
      std::ostringstream text;
      if (format == "csv") {
        text << "n,lambda\n";
        for (int n = 1; n <= count; ++n) text << n << "," << format_number(j0_zero(n).value) << "\n";
      } else {
        text << "[\n";
        for (int n = 1; n <= count; ++n) {
          text << "  {\"n\":" << n << ",\"value\":" << format_number(j0_zero(n).value) << "}"
               << (n < count ? ",\n" : "\n");
        }
        text << "]\n";
      }
      return emit(text.str(), out_path, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace zvar::cli
