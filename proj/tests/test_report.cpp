#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "renorm/report.hpp"
#include "renorm/types.hpp"

using namespace renorm;

namespace {

ProbeReport sample_report() {
  ProbeReport r;
  r.name = "sample";
  r.model.dim = 8;
  r.model.p = 2.0;
  r.model.tol = 1e-9;
  r.model.seed = 17;
  r.add("alpha", 0.25, 0.5, 0.25);
  r.add("beta", 1.0 / 3.0, 0.0, -0.125);
  r.runtime_ms = 12.5;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

bool volatile_line(const std::string& line) {
  return line.find("timestamp") != std::string::npos ||
         line.find("runtime_ms") != std::string::npos;
}

}  // namespace

TEST_CASE("row margins decide pass status") {
  ProbeReport r;
  r.add("ok", 1.0, 2.0, 0.0);
  r.add("also-ok", 1.0, 2.0, 1.0);
  r.add("bad", 3.0, 2.0, -1.0);
  CHECK(r.rows[0].pass);
  CHECK(r.rows[1].pass);
  CHECK_FALSE(r.rows[2].pass);
  CHECK_FALSE(r.all_pass());
  r.rows.pop_back();
  CHECK(r.all_pass());
}

TEST_CASE("json carries the schema fields") {
  ProbeReport r = sample_report();
  std::string j = to_json(r);
  CHECK(j.find("\"suite\": \"sample\"") != std::string::npos);
  CHECK(j.find("\"dim\": 8") != std::string::npos);
  CHECK(j.find("\"rows\"") != std::string::npos);
  CHECK(j.find("\"label\": \"alpha\"") != std::string::npos);
  CHECK(j.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"timestamp\"") != std::string::npos);
  CHECK(j.find("\"runtime_ms\"") != std::string::npos);
}

TEST_CASE("json is deterministic apart from clock fields") {
  ProbeReport r = sample_report();
  std::string a = to_json(r);
  r.runtime_ms = 99.0;
  std::string b = to_json(r);
  std::vector<std::string> la = lines_of(a);
  std::vector<std::string> lb = lines_of(b);
  REQUIRE(la.size() == lb.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (volatile_line(la[i])) {
      CHECK(volatile_line(lb[i]));
      continue;
    }
    CHECK(la[i] == lb[i]);
  }
}

TEST_CASE("doubles survive the serialization round trip") {
  ProbeReport r;
  double v = 1.0 / 3.0;
  r.add("third", v, 2e-300, 0.1234567890123456789);
  std::string j = to_json(r);
  CHECK(j.find("0.33333333333333331") != std::string::npos);
  CHECK(j.find("2.0000000000000001e-300") != std::string::npos);
}

TEST_CASE("csv has a header and one line per row") {
  ProbeReport r = sample_report();
  std::vector<std::string> lines = lines_of(to_csv(r));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "label,value,bound,margin,status");
  CHECK(lines[1].find("alpha,") == 0);
  CHECK(lines[1].find(",pass") != std::string::npos);
  CHECK(lines[2].find(",fail") != std::string::npos);
}

TEST_CASE("report writer rejects unknown formats") {
  ProbeReport r = sample_report();
  CHECK_THROWS_AS(write_report(r, "/tmp/renorm_report_test.xml", "xml"),
                  ConfigError);
  CHECK_NOTHROW(write_report(r, "/tmp/renorm_report_test.json", "json"));
  std::remove("/tmp/renorm_report_test.json");
}

TEST_CASE("labels with quotes and backslashes stay valid json") {
  ProbeReport r;
  r.name = "esc";
  r.add("say \"hi\" \\ there", 1.0, 2.0, 1.0);
  std::string j = to_json(r);
  CHECK(j.find("say \\\"hi\\\" \\\\ there") != std::string::npos);
}
