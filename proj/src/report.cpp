#include "renorm/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "renorm/types.hpp"

namespace renorm {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (static_cast<unsigned char>(c) < 0x20) continue;
    out.push_back(c);
  }
  return out;
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void ProbeReport::add(std::string label, double value, double bound,
                      double margin) {
  ProbeRow row;
  row.label = std::move(label);
  row.value = value;
  row.bound = bound;
  row.margin = margin;
  row.pass = margin >= 0.0;
  rows.push_back(std::move(row));
}

bool ProbeReport::all_pass() const {
  for (const ProbeRow& row : rows)
    if (!row.pass) return false;
  return true;
}

std::string to_json(const ProbeReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"suite\": \"" + escape_json(report.name) + "\",\n";
  out += "  \"model\": {\"dim\": " + std::to_string(report.model.dim) +
         ", \"p\": " + format_double(report.model.p) +
         ", \"tol\": " + format_double(report.model.tol) +
         ", \"seed\": " + std::to_string(report.model.seed) + "},\n";
  out += "  \"rows\": [\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ProbeRow& r = report.rows[i];
    out += "    {\"label\": \"" + escape_json(r.label) +
           "\", \"value\": " + format_double(r.value) +
           ", \"bound\": " + format_double(r.bound) +
           ", \"margin\": " + format_double(r.margin) + ", \"status\": \"" +
           (r.pass ? "pass" : "fail") + "\"}";
    out += (i + 1 < report.rows.size()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"runtime_ms\": " + format_double(report.runtime_ms) + ",\n";
  out += "  \"timestamp\": \"" + utc_timestamp() + "\"\n";
  out += "}\n";
  return out;
}

std::string to_csv(const ProbeReport& report) {
  std::string out = "label,value,bound,margin,status\n";
  for (const ProbeRow& r : report.rows) {
    out += r.label + "," + format_double(r.value) + "," +
           format_double(r.bound) + "," + format_double(r.margin) + "," +
           (r.pass ? "pass" : "fail") + "\n";
  }
  return out;
}

void write_report(const ProbeReport& report, const std::string& path,
                  const std::string& format) {
  std::string body;
  if (format == "json") {
    body = to_json(report);
  } else if (format == "csv") {
    body = to_csv(report);
  } else {
    throw ConfigError("write_report: unknown format '" + format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_report: cannot open '" + path + "'");
  out << body;
}

}  // namespace renorm
