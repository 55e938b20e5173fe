#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "renorm/base_norms.hpp"
#include "renorm/final_norm.hpp"
#include "renorm/hull_gauge.hpp"
#include "renorm/oracle.hpp"
#include "renorm/probes.hpp"
#include "renorm/report.hpp"
#include "renorm/types.hpp"

using namespace renorm;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

std::string failing_labels(const ProbeReport& r, std::size_t cap = 3) {
  std::string out;
  std::size_t shown = 0, total = 0;
  for (const ProbeRow& row : r.rows) {
    if (row.pass) continue;
    ++total;
    if (shown < cap) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s%s (value %.6g, bound %.6g)",
                    shown ? "; " : "", row.label.c_str(), row.value,
                    row.bound);
      out += buf;
      ++shown;
    }
  }
  if (total > shown)
    out += " and " + std::to_string(total - shown) + " more";
  return out;
}

Outcome from_report(const ProbeReport& r, const std::string& good_note) {
  Outcome o;
  o.pass = r.all_pass();
  o.note = o.pass ? good_note : failing_labels(r);
  return o;
}

Outcome rows_outcome(const ProbeReport& r,
                     const std::vector<std::string>& needles,
                     const std::string& good_note) {
  Outcome o;
  o.pass = true;
  ProbeReport filtered;
  for (const ProbeRow& row : r.rows) {
    bool wanted = false;
    for (const std::string& needle : needles)
      wanted = wanted || row.label.find(needle) != std::string::npos;
    if (!wanted) continue;
    filtered.rows.push_back(row);
    o.pass = o.pass && row.pass;
  }
  o.note = o.pass ? good_note : failing_labels(filtered);
  return o;
}

Outcome criterion_anchor(const FinalModel& model) {
  const std::size_t dim = model.config().dim;
  Vector apex(dim);
  apex.set_coeff(1, std::sqrt(2.0));
  double g = hull_gauge(apex, model.split_spec(), 1e-6).value;
  double n = model.norm(apex);
  Outcome o;
  o.pass = std::fabs(g - 1.0) <= 1e-6 && std::fabs(n - 1.0) <= 1e-6;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "gauge(sqrt2*e1) = %.12f, norm(sqrt2*e1) = %.12f", g, n);
  o.note = buf;
  return o;
}

Outcome criterion_oracle(const FinalModel& model) {
  SplitNormSpec spec3{3, model.config().p};
  ProbeReport a = oracle_suite(spec3, 100, 0);
  if (!a.all_pass()) {
    Outcome o;
    o.pass = false;
    o.note = "dim-3 oracle: " + failing_labels(a);
    return o;
  }
  double diff3 = 0.0;
  for (const ProbeRow& row : a.rows)
    if (row.label == "max-abs-diff") diff3 = row.value;

  SplitNormSpec spec16{16, 2.0};
  GaussianSource rng(404);
  double diff16 = 0.0;
  for (int i = 0; i < 200; ++i) {
    Vector x = rng.next_vector(16);
    double direct = hull_gauge(x, spec16, 1e-7).value;
    double dual = hull_gauge_hilbert_dual(x, spec16).value;
    diff16 = std::max(diff16, std::fabs(direct - dual));
  }
  Outcome o;
  o.pass = diff16 <= 1e-6;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "dim-3 vs oracle max diff %.3g (<= 1e-3), dim-16 route max "
                "diff %.3g (<= 1e-6)",
                diff3, diff16);
  o.note = buf;
  return o;
}

Outcome criterion_rotundity(const FinalModel& model) {
  const std::size_t dim = model.config().dim;
  ProbeReport fine = rotundity_scan(model.handle(NormTag::Final), dim, 1000, 0);
  Outcome o = from_report(fine, "");
  double dmin_final = 0.0;
  for (const ProbeRow& row : fine.rows)
    if (row.label == "min-defect") dmin_final = row.value;
  if (!o.pass) {
    o.note = "renormed scan: " + o.note;
    return o;
  }

  double dmin_all = dmin_final;
  const NormTag tags[] = {NormTag::BaseP, NormTag::Split, NormTag::Theta,
                          NormTag::HullGauge, NormTag::TroyanskiL1};
  for (NormTag tag : tags) {
    ProbeReport r = rotundity_scan(model.handle(tag), dim, 200, 1, 0.1, true);
    for (const ProbeRow& row : r.rows) {
      if (row.label != "min-defect") continue;
      dmin_all = std::min(dmin_all, row.value);
      if (row.value < -1e-9) {
        o.pass = false;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "convexity violation on %s: min defect %.3g",
                      norm_tag_name(tag), row.value);
        o.note = buf;
        return o;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1000 pairs strictly rotund (min defect %.3g); convexity min "
                "across handles %.3g >= -1e-9",
                dmin_final, dmin_all);
  o.note = buf;
  return o;
}

Outcome criterion_lift(const ModelConfig& cfg) {
  ModelConfig block = cfg;
  block.dim = 64;
  ProbeReport r = lift_suite(block, 128, 20);
  return from_report(
      r, "dim-128 lift matches the block norm and the embedded witnesses");
}

void print_line(int k, const Outcome& o, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k,
              o.note.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

int main() try {
  ModelConfig cfg;
  int failures = 0;

  FinalModel model(cfg);
  ProbeReport trace = lur_failure_trace(model, 20);

  std::vector<std::pair<int, std::function<Outcome()>>> criteria;
  criteria.emplace_back(1, [&] { return criterion_anchor(model); });
  criteria.emplace_back(2, [&] {
    return rows_outcome(trace, {"norm-sq", "pairing", "support"},
                        "witness norms, pairings, and supports within "
                        "tolerance for n = 1..20");
  });
  criteria.emplace_back(3, [&] {
    return rows_outcome(trace, {"defect-pos", "defect-bound", "distance"},
                        "defects positive, O(1/n^2)-bounded, and witnesses "
                        "stay 0.5 away from the apex");
  });
  criteria.emplace_back(4, [&] { return criterion_oracle(model); });
  criteria.emplace_back(5, [&] { return criterion_rotundity(model); });
  criteria.emplace_back(6, [&] {
    return from_report(gateaux_scan(model, 20, {1e-2, 1e-3, 1e-4}, 0),
                       "difference quotients nonnegative, decreasing, and "
                       "small at h = 1e-4 on all probe points");
  });
  criteria.emplace_back(7, [&] {
    return from_report(boundary_suite(model, 100, 0.01, 0),
                       "100 boundary decompositions certified; horizontal "
                       "probes exit the ball on every point");
  });
  criteria.emplace_back(8, [&] {
    return from_report(l1_suite(1000, {0.1, 0.01, 0.001}, 10000, 0),
                       "dual bound holds on 10^4 samples; sphere family on "
                       "the sphere; every slice holds two far points");
  });
  criteria.emplace_back(9, [&] {
    return from_report(kadec_probe(model, 0.1, {8, 16, 32, 63}),
                       "vertical sections pin alpha_k <= 0.95 and the weak "
                       "limit sits at norm 1/2");
  });
  criteria.emplace_back(10, [&] { return criterion_lift(cfg); });

  for (auto& [k, fn] : criteria) {
    auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    print_line(k, o, seconds);
    if (!o.pass) ++failures;
  }

  std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
  return failures;
} catch (const std::exception& e) {
  std::printf("[FAIL] setup: %s\n", e.what());
  return 10;
}
