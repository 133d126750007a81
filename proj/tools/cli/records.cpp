#include "records.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace zvar::cli {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string json_number(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return "null";
  return format_number(*x);
}

std::string csv_number(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return "";
  return format_number(*x);
}

}  // namespace

std::string to_json(const Record& r) {
  std::string out = "{\"quantity\":" + nlohmann::json(r.quantity).dump();
  out += ",\"c\":" + json_number(r.c);
  out += ",\"s\":" + json_number(r.s);
  out += ",\"method\":" + nlohmann::json(r.method).dump();
  out += ",\"value\":" + json_number(r.value);
  out += ",\"error_estimate\":" + json_number(r.error_estimate);
  out += ",\"evaluations\":" + std::to_string(r.evaluations);
  out += std::string(",\"status\":\"") + (r.ok ? "ok" : "error") + "\"}";
  return out;
}

std::string to_csv(const Record& r) {
  return r.quantity + "," + csv_number(r.c) + "," + csv_number(r.s) + "," + r.method + "," +
         csv_number(r.value) + "," + csv_number(r.error_estimate) + "," +
         std::to_string(r.evaluations) + "," + (r.ok ? "ok" : "error");
}

std::string render(const std::vector<Record>& rows, bool csv) {
  std::string out;
  if (csv) {
    out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) out += to_csv(r) + "\n";
    return out;
  }
  out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "  " + to_json(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  out += "]\n";
  return out;
}

}  // namespace zvar::cli
