#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "records.hpp"

namespace zvar::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

/// One evaluation request as parsed from the command line.
struct Query {
  std::string quantity;
  std::optional<double> c;
  std::optional<double> s;
  std::string method = "auto";
  double tol = 1e-12;
};

/// Evaluates a query. Throws UsageError for method/quantity mismatches and
/// lets library errors propagate.
Record evaluate(const Query& q);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Entry point shared by the executable and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zvar::cli
