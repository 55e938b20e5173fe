#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "renorm/final_norm.hpp"
#include "renorm/hull_gauge.hpp"
#include "renorm/oracle.hpp"
#include "renorm/probes.hpp"
#include "renorm/report.hpp"
#include "renorm/types.hpp"

namespace {

using namespace renorm;

std::vector<double> parse_vector_literal(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    std::size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ConfigError("empty component in vector literal");
    token = token.substr(a, b - a + 1);
    double v = 0.0;
    std::size_t idx = 0;
    try {
      v = std::stod(token, &idx);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse component '" + token + "'");
    }
    if (idx != token.size())
      throw ConfigError("trailing characters in component '" + token + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty vector literal");
  return out;
}

double eval_norm(const std::string& norm, const std::vector<double>& coords,
                 double p) {
  const std::size_t n = coords.size();
  Vector x{std::vector<double>(coords)};
  SplitNormSpec spec;
  spec.dim = n;
  spec.p = p;
  if (norm == "base") return base_lur_norm(x, p);
  if (norm == "split") return split_norm(x, spec);
  if (norm == "theta") return theta_norm(x, TOperatorSpec::standard(n));
  if (norm == "hull") return hull_gauge(x, spec).value;
  if (norm == "hull-dual") return hull_gauge_hilbert_dual(x, spec).value;
  if (norm == "support-d")
    return support_d(Functional{std::vector<double>(coords)}, spec);
  if (norm == "troyanski") return troyanski_l1_norm(x);
  if (norm == "final") {
    ModelConfig cfg;
    cfg.dim = std::max<std::size_t>(n, 4);
    cfg.p = p;
    Vector padded(cfg.dim);
    for (std::size_t i = 0; i < n; ++i) padded[i] = coords[i];
    return FinalModel(cfg).norm(padded);
  }
  throw ConfigError("unknown norm tag '" + norm + "'");
}

void fill_snapshot(ProbeReport& report, const ModelConfig& cfg) {
  if (report.model.dim == 0) report.model.dim = cfg.dim;
  if (report.model.p == 0.0) report.model.p = cfg.p;
  if (report.model.tol == 0.0) report.model.tol = cfg.gauge_tol;
  if (report.model.seed == 0) report.model.seed = cfg.seed;
}

std::string lur_trace_csv(const ProbeReport& report) {
  struct TraceRow {
    double norm_sq = 0, bound = 0, gauge_mid = 0, defect = 0, dist = 0;
  };
  std::map<std::size_t, TraceRow> table;
  for (const ProbeRow& row : report.rows) {
    std::size_t n = 0;
    char metric[64] = {0};
    if (std::sscanf(row.label.c_str(), "n=%zu %63s", &n, metric) != 2)
      continue;
    TraceRow& tr = table[n];
    std::string m = metric;
    if (m == "norm-sq") {
      tr.norm_sq = row.value;
      tr.bound = row.bound;
    } else if (m == "gauge-mid") {
      tr.gauge_mid = row.value;
    } else if (m == "defect-pos") {
      tr.defect = row.value;
    } else if (m == "distance") {
      tr.dist = row.value;
    }
  }
  char buf[256];
  std::string out = "n,xn_norm_sq,norm_sq_bound,gauge_mid,defect,dist\n";
  for (const auto& [n, tr] : table) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", n,
                  tr.norm_sq, tr.bound, tr.gauge_mid, tr.defect, tr.dist);
    out += buf;
  }
  return out;
}

struct SuiteOptions {
  ModelConfig cfg;
  std::string name;
  std::string out_path;
  std::string format = "json";
  std::size_t samples = 10000;
  std::size_t pairs = 1000;
  std::size_t points = 0;
  std::size_t nmax = 0;
  std::string nrange;
  double beta = 0.1;
  double t = 0.01;
  std::size_t total_dim = 0;
};

ProbeReport run_suite(const SuiteOptions& opt) {
  const ModelConfig& cfg = opt.cfg;
  if (opt.name == "lur-witness") {
    FinalModel model(cfg);
    std::size_t nmax = opt.nmax ? opt.nmax : std::min<std::size_t>(20, cfg.dim / 3);
    return lur_failure_trace(model, nmax);
  }
  if (opt.name == "l1") {
    std::size_t n_max = 1000;
    if (!opt.nrange.empty()) {
      std::size_t lo = 0, hi = 0;
      if (std::sscanf(opt.nrange.c_str(), "%zu:%zu", &lo, &hi) != 2 || hi < 2)
        throw ConfigError("cannot parse --nrange '" + opt.nrange + "'");
      n_max = hi;
    } else if (opt.nmax) {
      n_max = opt.nmax;
    }
    return l1_suite(n_max, {0.1, 0.01, 0.001}, opt.samples, cfg.seed);
  }
  if (opt.name == "rotundity") {
    FinalModel model(cfg);
    ProbeReport report =
        rotundity_scan(model.handle(NormTag::Final), cfg.dim, opt.pairs, cfg.seed);
    report.name = "rotundity";
    const NormTag others[] = {NormTag::BaseP, NormTag::Split, NormTag::Theta,
                              NormTag::HullGauge, NormTag::TroyanskiL1};
    for (NormTag tag : others) {
      ProbeReport sub =
          rotundity_scan(model.handle(tag), cfg.dim, 200, cfg.seed + 1, 0.1, true);
      for (ProbeRow& row : sub.rows) {
        row.label = std::string(norm_tag_name(tag)) + " " + row.label;
        report.rows.push_back(std::move(row));
      }
    }
    return report;
  }
  if (opt.name == "gateaux") {
    FinalModel model(cfg);
    std::size_t pts = opt.points ? opt.points : 20;
    return gateaux_scan(model, pts, {1e-2, 1e-3, 1e-4}, cfg.seed);
  }
  if (opt.name == "boundary") {
    FinalModel model(cfg);
    return boundary_suite(model, opt.points ? opt.points : 100, opt.t, cfg.seed);
  }
  if (opt.name == "kadec") {
    FinalModel model(cfg);
    std::vector<std::size_t> ks;
    for (std::size_t k : {std::size_t(8), std::size_t(16), std::size_t(32),
                          cfg.dim - 1})
      if (k >= 1 && k <= cfg.dim && (ks.empty() || k != ks.back()))
        ks.push_back(k);
    return kadec_probe(model, opt.beta, ks);
  }
  if (opt.name == "lift") {
    std::size_t total = opt.total_dim ? opt.total_dim : 2 * cfg.dim;
    std::size_t nmax = opt.nmax ? opt.nmax : std::min<std::size_t>(20, cfg.dim / 3);
    return lift_suite(cfg, total, nmax);
  }
  if (opt.name == "oracle") {
    SplitNormSpec spec;
    spec.dim = std::min<std::size_t>(cfg.dim, 3);
    spec.p = cfg.p;
    return oracle_suite(spec, opt.points ? opt.points : 100, cfg.seed);
  }
  throw ConfigError("unknown suite '" + opt.name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a rotund Gateaux-smooth renorming"};
  app.require_subcommand(1);

  std::string eval_norm_tag;
  std::string eval_literal;
  double eval_p = 2.0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one norm at a vector");
  eval->add_option("--norm", eval_norm_tag,
                   "base|split|theta|hull|hull-dual|final|troyanski|support-d")
      ->required();
  eval->add_option("--x", eval_literal, "comma-separated coordinates")
      ->required();
  eval->add_option("--p", eval_p, "base exponent (default 2)");

  SuiteOptions opt;
  CLI::App* suite = app.add_subcommand("suite", "run a probe suite");
  suite->add_option("name", opt.name,
                    "lur-witness|l1|rotundity|gateaux|boundary|kadec|lift|oracle")
      ->required();
  suite->add_option("--dim", opt.cfg.dim, "model dimension (default 64)");
  suite->add_option("--p", opt.cfg.p, "base exponent (default 2)");
  suite->add_option("--tol", opt.cfg.gauge_tol, "gauge tolerance (default 1e-9)");
  suite->add_option("--seed", opt.cfg.seed, "sampling seed (default 0)");
  suite->add_option("--samples", opt.samples, "random samples (l1)");
  suite->add_option("--pairs", opt.pairs, "sphere pairs (rotundity)");
  suite->add_option("--points", opt.points, "probe points (boundary/oracle/gateaux)");
  suite->add_option("--nmax", opt.nmax, "witness range upper index");
  suite->add_option("--nrange", opt.nrange, "index range lo:hi (l1)");
  suite->add_option("--beta", opt.beta, "tail mass (kadec)");
  suite->add_option("--t", opt.t, "horizontal probe step (boundary)");
  suite->add_option("--total-dim", opt.total_dim, "lifted dimension (lift)");
  suite->add_option("--out", opt.out_path, "report file path");
  suite->add_option("--format", opt.format, "json|csv (default json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      std::vector<double> coords = parse_vector_literal(eval_literal);
      double value = ::eval_norm(eval_norm_tag, coords, eval_p);
      std::printf("%.17g\n", value);
      return 0;
    }

    auto started = std::chrono::steady_clock::now();
    ProbeReport report = run_suite(opt);
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
    fill_snapshot(report, opt.cfg);

    std::string body;
    if (opt.format == "csv" && report.name == "lur-witness")
      body = lur_trace_csv(report);
    else if (opt.format == "csv")
      body = to_csv(report);
    else if (opt.format == "json")
      body = to_json(report);
    else
      throw ConfigError("unknown format '" + opt.format + "'");

    if (!opt.out_path.empty()) {
      std::ofstream out(opt.out_path, std::ios::binary);
      if (!out) throw ConfigError("cannot open '" + opt.out_path + "'");
      out << body;
    } else {
      std::cout << body;
    }

    std::size_t failures = 0;
    for (const ProbeRow& row : report.rows)
      if (!row.pass) ++failures;
    if (failures > 0) {
      std::cerr << report.name << ": " << failures << " of "
                << report.rows.size() << " rows failed\n";
      for (const ProbeRow& row : report.rows)
        if (!row.pass)
          std::cerr << "  fail: " << row.label << " value " << row.value
                    << " bound " << row.bound << "\n";
      return 1;
    }
    return 0;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
