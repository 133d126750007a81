#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zvar::cli {

/// One output row. Absent c or s serialize as null.
struct Record {
  std::string quantity;
  std::optional<double> c;
  std::optional<double> s;
  std::string method;
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool ok = true;
};

inline constexpr const char* kCsvHeader =
    "quantity,c,s,method,value,error_estimate,evaluations,status";

/// %.17g, or "null"/"" for non-finite values in JSON/CSV respectively.
std::string format_number(double x);

std::string to_json(const Record& r);
std::string to_csv(const Record& r);

/// JSON array with one record per line, or CSV with header.
std::string render(const std::vector<Record>& rows, bool csv);

}  // namespace zvar::cli
