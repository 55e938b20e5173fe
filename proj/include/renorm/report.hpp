#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace renorm {

struct ProbeRow {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = true;
};

struct ModelSnapshot {
  std::size_t dim = 0;
  double p = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;
};

struct ProbeReport {
  std::string name;
  ModelSnapshot model;
  std::vector<ProbeRow> rows;
  double runtime_ms = 0.0;

  void add(std::string label, double value, double bound, double margin);
  bool all_pass() const;
};

std::string to_json(const ProbeReport& report);
std::string to_csv(const ProbeReport& report);

/// format is "json" or "csv"; anything else is a ConfigError.
void write_report(const ProbeReport& report, const std::string& path,
                  const std::string& format);

}  // namespace renorm
