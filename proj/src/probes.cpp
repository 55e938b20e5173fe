#include "renorm/probes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "renorm/detail/scalar_opt.hpp"
#include "renorm/oracle.hpp"
#include "renorm/parallel.hpp"

namespace renorm {

namespace {

std::string num_label(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%g", prefix, v);
  return buf;
}

std::string index_label(const char* prefix, std::size_t i, const char* suffix) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s%zu %s", prefix, i, suffix);
  return buf;
}

Vector embed(const Vector& v, std::size_t total_dim, std::size_t offset = 0) {
  Vector out(total_dim);
  for (std::size_t i = 0; i < v.dim(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

WitnessTriple lur_witness(std::size_t n, std::size_t dim) {
  if (n < 1) throw ConfigError("lur_witness: index starts at 1");
  if (3 * n > dim)
    throw DimensionError("lur_witness: needs 3n <= dim");
  WitnessTriple w;
  w.n = n;
  const double r2 = std::sqrt(2.0);
  w.x0 = Vector(dim);
  w.x0[0] = r2;
  w.xn = Vector(dim);
  w.xn[0] = 1.0 / r2;
  w.xn[3 * n - 1] = 1.0 / r2;
  w.xn_star = Functional(dim);
  w.xn_star[0] = 1.0;
  w.xn_star[3 * n - 1] = 1.0;
  double bump = 1.0 / (r2 * 9.0 * double(n) * double(n));
  w.zn = 0.5 * (w.x0 + w.xn) + bump * w.xn;
  return w;
}

double midpoint_defect(const NormHandle& handle, const Vector& x,
                       const Vector& y) {
  double nx = handle(x);
  double ny = handle(y);
  double nm = handle(x + y);
  return 2.0 * nx * nx + 2.0 * ny * ny - nm * nm;
}

NormHandle make_troyanski_handle(std::size_t dim) {
  NormHandle h;
  h.tag = NormTag::TroyanskiL1;
  h.eval = [dim](const Vector& x) {
    if (x.dim() != dim)
      throw DimensionError("troyanski handle: vector length mismatch");
    return troyanski_l1_norm(x);
  };
  return h;
}

ProbeReport rotundity_scan(const NormHandle& handle, std::size_t dim,
                           std::size_t pairs, std::uint64_t seed,
                           double min_separation, bool separation_in_norm) {
  if (pairs < 1) throw ConfigError("rotundity_scan: needs at least one pair");
  ProbeReport report;
  report.name = std::string("rotundity-") + norm_tag_name(handle.tag);
  report.model.dim = dim;
  report.model.seed = seed;

  std::size_t budget = 3 * pairs;
  std::vector<Vector> raw(2 * budget);
  {
    GaussianSource rng(seed);
    for (auto& v : raw) v = rng.next_vector(dim);
  }
  std::vector<double> defect(budget,
                             std::numeric_limits<double>::quiet_NaN());
  detail::parallel_for(budget, [&](std::size_t i) {
    Vector x = raw[2 * i];
    Vector y = raw[2 * i + 1];
    double nx = handle(x);
    double ny = handle(y);
    if (!(nx > 0.0) || !(ny > 0.0)) return;
    x *= 1.0 / nx;
    y *= 1.0 / ny;
    double sep = separation_in_norm ? handle(x - y) : l2_norm(x - y);
    if (sep < min_separation) return;
    defect[i] = midpoint_defect(handle, x, y);
  });

  std::size_t used = 0;
  std::size_t violations = 0;
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < budget && used < pairs; ++i) {
    if (std::isnan(defect[i])) continue;
    ++used;
    dmin = std::min(dmin, defect[i]);
    if (!(defect[i] > 0.0)) ++violations;
  }
  report.add("pairs-evaluated", double(used), double(pairs),
             double(used) - double(pairs));
  report.add("min-defect", dmin, 0.0, dmin);
  report.add("defect-violations", double(violations), 0.0,
             -double(violations));
  return report;
}

ProbeReport lur_failure_trace(const FinalModel& model, std::size_t n_max) {
  const std::size_t dim = model.config().dim;
  if (n_max < 1) throw ConfigError("lur_failure_trace: n_max starts at 1");
  if (3 * n_max > dim)
    throw DimensionError("lur_failure_trace: needs 3*n_max <= dim");
  ProbeReport report;
  report.name = "lur-witness";
  report.model.dim = dim;
  report.model.p = model.config().p;
  report.model.tol = model.config().gauge_tol;

  NormHandle N = model.handle(NormTag::Final);
  const double r2 = std::sqrt(2.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    WitnessTriple w = lur_witness(n, dim);
    double nn = N(w.xn);
    double nn_sq = nn * nn;
    double sq_bound = 1.0 + std::ldexp(1.0, -int(3 * n + 1)) + 1e-9;
    report.add(index_label("n=", n, "norm-sq"), nn_sq, sq_bound,
               sq_bound - nn_sq);

    double gauge_mid = model.gauge(0.5 * (w.x0 + w.xn));
    double mid_bound = 1.0 - nn / (r2 * 9.0 * double(n) * double(n)) - 1e-9;
    report.add(index_label("n=", n, "gauge-mid"), gauge_mid, mid_bound,
               gauge_mid - mid_bound);

    double defect = midpoint_defect(N, w.x0, w.xn);
    report.add(index_label("n=", n, "defect-pos"), defect, 0.0, defect);
    double defect_bound = n >= 2 ? 5.0 / (double(n) * double(n)) : 5.0;
    report.add(index_label("n=", n, "defect-bound"), defect, defect_bound,
               defect_bound - defect);

    double dist = N(w.xn - w.x0);
    report.add(index_label("n=", n, "distance"), dist, 0.5, dist - 0.5);

    double pairing = pair(w.xn_star, w.xn);
    report.add(index_label("n=", n, "pairing"), pairing, r2,
               1e-12 - std::abs(pairing - r2));

    double supd = support_d(w.xn_star, model.split_spec());
    double sup_bound = r2 + 1.0 / (9.0 * double(n) * double(n)) + 1e-12;
    report.add(index_label("n=", n, "support"), supd, sup_bound,
               sup_bound - supd);
  }
  return report;
}

double gateaux_quotient(const NormHandle& handle, const Vector& x,
                        const Vector& y, double h) {
  if (!(h > 0.0)) throw DomainError("gateaux_quotient: step must be positive");
  double nx = handle(x);
  double ny = handle(y);
  if (std::abs(nx - 1.0) > 1e-6 || std::abs(ny - 1.0) > 1e-6)
    throw DomainError("gateaux_quotient: both arguments must be unit vectors");
  return (handle(x + h * y) + handle(x - h * y) - 2.0 * nx) / h;
}

ProbeReport gateaux_scan(const FinalModel& model, std::size_t points,
                         const std::vector<double>& h_schedule,
                         std::uint64_t seed) {
  if (h_schedule.size() < 2)
    throw ConfigError("gateaux_scan: schedule needs at least two steps");
  const std::size_t dim = model.config().dim;
  ProbeReport report;
  report.name = "gateaux";
  report.model.dim = dim;
  report.model.p = model.config().p;
  report.model.tol = model.config().gauge_tol;
  report.model.seed = seed;

  std::vector<double> hs = h_schedule;
  std::sort(hs.begin(), hs.end(), std::greater<double>());

  NormHandle N = model.handle(NormTag::Final);
  Vector apex(dim);
  apex[0] = std::sqrt(2.0);
  apex *= 1.0 / N(apex);

  std::vector<Vector> xs = sphere_sample(N, dim, points, seed);
  std::vector<Vector> ys = sphere_sample(N, dim, points + 1, seed + 1);

  for (std::size_t i = 0; i <= points; ++i) {
    const Vector& x = (i == 0) ? apex : xs[i - 1];
    const Vector& y = ys[i];
    std::vector<double> q(hs.size());
    for (std::size_t j = 0; j < hs.size(); ++j) {
      q[j] = gateaux_quotient(N, x, y, hs[j]);
      report.add(num_label((index_label("pt", i, "nonneg h=")).c_str(), hs[j]),
                 q[j], 0.0, q[j]);
    }
    double q_small = q.back();
    report.add(index_label("pt", i, "smallest-step"), q_small, 1e-3,
               1e-3 - q_small);
    for (std::size_t j = 0; j + 1 < hs.size(); ++j) {
      double bound = q[j] + 1e-9;
      report.add(num_label((index_label("pt", i, "monotone to h=")).c_str(),
                           hs[j + 1]),
                 q[j + 1], bound, bound - q[j + 1]);
    }
  }
  return report;
}

SliceSpec make_final_slice(const FinalModel& model, Functional f, double alpha,
                           int budget) {
  if (!(alpha > 0.0)) throw ConfigError("make_final_slice: alpha must be > 0");
  DualEstimate d = dual_norm_final(model, f, budget);
  if (d.flagged)
    throw NumericalError(
        "make_final_slice: dual enclosure too wide to anchor the slice");
  SliceSpec s;
  s.f = std::move(f);
  s.alpha = alpha;
  s.handle = model.handle(NormTag::Final);
  s.sup_ball = d.upper;
  return s;
}

SliceSpec make_troyanski_slice(std::size_t dim, double alpha) {
  if (!(alpha > 0.0))
    throw ConfigError("make_troyanski_slice: alpha must be > 0");
  if (dim < 2) throw DimensionError("make_troyanski_slice: needs dim >= 2");
  SliceSpec s;
  s.f = Functional(dim);
  s.f[0] = 2.0;
  for (std::size_t i = 1; i < dim; ++i) s.f[i] = 1.0;
  s.alpha = alpha;
  s.handle = make_troyanski_handle(dim);
  s.sup_ball = 1.0;
  return s;
}

bool slice_contains(const SliceSpec& s, const Vector& x) {
  double nx = s.handle(x);
  if (nx > 1.0 + 1e-6)
    throw DomainError("slice_contains: point lies outside the unit ball");
  return pair(s.f, x) > s.sup_ball - s.alpha;
}

std::optional<double> slice_diameter_lb(const SliceSpec& s, std::size_t budget,
                                        std::uint64_t seed,
                                        const std::vector<Vector>& extra_members) {
  const std::size_t dim = s.f.dim();
  std::vector<Vector> members;
  for (const Vector& v : extra_members)
    if (slice_contains(s, v)) members.push_back(v);
  if (budget > 0) {
    std::vector<Vector> samples = sphere_sample(s.handle, dim, budget, seed);
    for (Vector& v : samples) {
      if (members.size() >= 64) break;
      if (slice_contains(s, v)) members.push_back(v);
      Vector neg = -1.0 * v;
      if (slice_contains(s, neg)) members.push_back(std::move(neg));
    }
  }
  if (members.size() < 2) return std::nullopt;
  double best = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      best = std::max(best, s.handle(members[i] - members[j]));
  return best;
}

ProbeReport strongly_exposed_probe(const NormHandle& handle, const Vector& x,
                                   const Functional& f, double sup_ball,
                                   std::size_t k, std::uint64_t seed,
                                   const std::vector<Vector>& extra_members) {
  if (k < 1) throw ConfigError("strongly_exposed_probe: needs k >= 1");
  if (std::abs(pair(f, x) - sup_ball) > 1e-3)
    throw DomainError(
        "strongly_exposed_probe: x must nearly attain the supremum");
  ProbeReport report;
  report.name = std::string("strongly-exposed-") + norm_tag_name(handle.tag);
  report.model.dim = x.dim();
  report.model.seed = seed;

  std::vector<Vector> pool;
  pool.push_back(x);
  for (const Vector& v : extra_members) pool.push_back(v);
  for (Vector& v : sphere_sample(handle, x.dim(), 32, seed))
    pool.push_back(std::move(v));

  for (std::size_t j = 1; j <= k; ++j) {
    double alpha = std::ldexp(1.0, -int(j));
    SliceSpec s{f, alpha, handle, sup_ball};
    double far = 0.0;
    std::size_t found = 0;
    for (const Vector& v : pool) {
      if (!slice_contains(s, v)) continue;
      ++found;
      far = std::max(far, handle(v - x));
    }
    report.add(num_label("max-dist alpha=", alpha), far, 0.0, far);
    report.add(num_label("members alpha=", alpha), double(found), 1.0,
               double(found) - 1.0);
  }
  return report;
}

ProbeReport kadec_probe(const FinalModel& model, double beta,
                        const std::vector<std::size_t>& k_schedule) {
  if (beta < 0.0 || beta >= 1.0)
    throw ConfigError("kadec_probe: beta must lie in [0, 1)");
  const std::size_t dim = model.config().dim;
  ProbeReport report;
  report.name = "kadec";
  report.model.dim = dim;
  report.model.p = model.config().p;
  report.model.tol = model.config().gauge_tol;

  const double r2 = std::sqrt(2.0);
  for (std::size_t k : k_schedule) {
    if (k < 1 || k > dim)
      throw DimensionError("kadec_probe: index outside the model");
    auto g = [&](double alpha) {
      Vector v(dim);
      v[0] = alpha * r2;
      v.set_coeff(k, v.coeff(k) + beta);
      return model.norm(v) - 1.0;
    };
    double alpha_k = detail::bisect_increasing(g, 0.0, 1.0 + beta, 1e-12);
    double bound = beta > 0.0 ? 1.0 - beta / 2.0 : 1.0 + 1e-9;
    report.add(index_label("k=", k, "alpha"), alpha_k, bound, bound - alpha_k);
  }

  Vector weak_limit(dim);
  weak_limit[0] = r2 / 2.0;
  double wl_norm = model.norm(weak_limit);
  report.add("weak-limit norm", wl_norm, 0.5, 1e-6 - std::abs(wl_norm - 0.5));

  std::size_t n_wit = dim / 3;
  WitnessTriple w = lur_witness(n_wit, dim);
  double coord_gap = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j == 3 * n_wit - 1) continue;
    coord_gap = std::max(coord_gap, std::abs(w.xn[j] - weak_limit[j]));
  }
  report.add("weak-limit coords", coord_gap, 1e-12, 1e-12 - coord_gap);
  double escaping = std::abs(w.xn[3 * n_wit - 1]);
  report.add("escaping-mass", escaping, 1.0 / r2,
             1e-12 - std::abs(escaping - 1.0 / r2));
  return report;
}

ProbeReport l1_suite(std::size_t n_max, const std::vector<double>& deltas,
                     std::size_t samples, std::uint64_t seed) {
  if (n_max < 2) throw ConfigError("l1_suite: n_max must be >= 2");
  const std::size_t dim = n_max + 1;
  ProbeReport report;
  report.name = "l1";
  report.model.dim = dim;
  report.model.p = 1.0;
  report.model.seed = seed;

  NormHandle handle = make_troyanski_handle(dim);
  Functional xstar(dim);
  xstar[0] = 2.0;
  for (std::size_t i = 1; i < dim; ++i) xstar[i] = 1.0;

  std::vector<double> margins(samples, 0.0);
  detail::parallel_for(samples, [&](std::size_t i) {
    GaussianSource rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    Vector y = rng.next_vector(dim);
    margins[i] = troyanski_l1_norm(y) - std::abs(pair(xstar, y));
  });
  std::size_t violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (double m : margins) {
    min_margin = std::min(min_margin, m);
    if (m < 0.0) ++violations;
  }
  report.add("dual-violations", double(violations), 0.0, -double(violations));
  report.add("dual-min-margin", min_margin, 0.0, min_margin);

  Vector half_e1(dim);
  half_e1[0] = 0.5;
  double pairing = pair(xstar, half_e1);
  report.add("pairing-at-half-e1", pairing, 1.0,
             1e-12 - std::abs(pairing - 1.0));

  std::vector<double> deviation(n_max + 1, 0.0);
  detail::parallel_for(n_max - 1, [&](std::size_t idx) {
    std::size_t n = idx + 2;
    Vector v(dim);
    double c = double(n) / double(n + 1);
    v.set_coeff(n, c);
    deviation[n] = std::abs(troyanski_l1_norm(v) - 1.0);
  });
  double worst = 0.0;
  for (std::size_t n = 2; n <= n_max; ++n) worst = std::max(worst, deviation[n]);
  report.add("sphere-family-max-deviation", worst, 1e-12, 1e-12 - worst);

  for (double delta : deltas) {
    if (!(delta > 0.0)) throw ConfigError("l1_suite: deltas must be positive");
    SliceSpec s = make_troyanski_slice(dim, delta);
    std::size_t n_in = std::size_t((1.0 - delta) / delta) + 1;
    n_in = std::max<std::size_t>(n_in, 2);
    if (n_in > n_max)
      throw DimensionError("l1_suite: delta needs indices beyond n_max");
    Vector inside(dim);
    inside.set_coeff(n_in, double(n_in) / double(n_in + 1));

    bool member_half = slice_contains(s, half_e1);
    report.add(num_label("member-half-e1 delta=", delta),
               member_half ? 1.0 : 0.0, 1.0, member_half ? 0.0 : -1.0);
    bool member_en = slice_contains(s, inside);
    report.add(num_label("member-en delta=", delta), member_en ? 1.0 : 0.0,
               1.0, member_en ? 0.0 : -1.0);

    std::size_t n_out = n_in - 1;
    if (n_out >= 2 && double(n_out) / double(n_out + 1) <= 1.0 - delta) {
      Vector outside(dim);
      outside.set_coeff(n_out, double(n_out) / double(n_out + 1));
      bool member_out = slice_contains(s, outside);
      report.add(num_label("excluded-en delta=", delta),
                 member_out ? 1.0 : 0.0, 0.0, member_out ? -1.0 : 0.0);
    }

    double dist = handle(half_e1 - inside);
    report.add(num_label("separation delta=", delta), dist, 0.5, dist - 0.5);
  }
  return report;
}

ProbeReport boundary_suite(const FinalModel& model, std::size_t points,
                           double t, std::uint64_t seed) {
  if (points < 1) throw ConfigError("boundary_suite: needs points >= 1");
  if (!(t > 0.0)) throw ConfigError("boundary_suite: t must be positive");
  const std::size_t dim = model.config().dim;
  const SplitNormSpec& spec = model.split_spec();
  ProbeReport report;
  report.name = "boundary";
  report.model.dim = dim;
  report.model.p = model.config().p;
  report.model.tol = model.config().gauge_tol;
  report.model.seed = seed;

  struct PointStats {
    double residual = 0.0;
    bool lambda_ok = true;
    double factor_err = 0.0;
    double probe_excess = 0.0;
  };
  std::vector<PointStats> stats(points);
  std::vector<Vector> dirs(points);
  {
    GaussianSource rng(seed);
    for (auto& d : dirs) d = rng.next_vector(dim);
  }
  TOperatorSpec op = TOperatorSpec::standard(dim);
  detail::parallel_for(points, [&](std::size_t i) {
    double g = hull_gauge_auto(dirs[i], spec).value;
    Vector x = (1.0 / g) * dirs[i];
    GaugeResult r = boundary_decompose(x, spec);
    PointStats& st = stats[i];
    st.residual = std::abs(r.residual);
    st.lambda_ok = r.lambda >= 0.0 && r.lambda <= 1.0;
    if (r.b) st.factor_err = std::abs(split_norm(*r.b, spec) - 1.0);
    if (r.c)
      st.factor_err =
          std::max(st.factor_err, std::abs(theta_norm(*r.c, op) - 1.0));
    HorizontalProbe probe = horizontal_segment_probe(x, spec, t);
    st.probe_excess = std::max(probe.gauge_plus, probe.gauge_minus) - 1.0;
  });

  double max_residual = 0.0;
  std::size_t lambda_violations = 0;
  double max_factor = 0.0;
  double min_probe = std::numeric_limits<double>::infinity();
  for (const PointStats& st : stats) {
    max_residual = std::max(max_residual, st.residual);
    if (!st.lambda_ok) ++lambda_violations;
    max_factor = std::max(max_factor, st.factor_err);
    min_probe = std::min(min_probe, st.probe_excess);
  }
  report.add("points", double(points), double(points), 0.0);
  report.add("max-residual", max_residual, 1e-8, 1e-8 - max_residual);
  report.add("lambda-violations", double(lambda_violations), 0.0,
             -double(lambda_violations));
  report.add("max-factor-error", max_factor, 1e-6, 1e-6 - max_factor);
  report.add("min-probe-excess", min_probe, 1e-6, min_probe - 1e-6);
  return report;
}

ProbeReport lift_suite(const ModelConfig& block_cfg, std::size_t total_dim,
                       std::size_t witness_max) {
  FinalModel block(block_cfg);
  const std::size_t k = block_cfg.dim;
  if (total_dim <= k)
    throw ConfigError("lift_suite: total dimension must exceed the block");
  if (witness_max < 1 || 3 * witness_max > k)
    throw DimensionError("lift_suite: witness range outside the block");
  NormHandle lifted = make_lifted_handle(block, total_dim);
  NormHandle block_norm = block.handle(NormTag::Final);

  ProbeReport report;
  report.name = "lift";
  report.model.dim = total_dim;
  report.model.p = block_cfg.p;
  report.model.tol = block_cfg.gauge_tol;
  report.model.seed = block_cfg.seed;

  GaussianSource rng(0x11f7ed5eedULL);
  double head_diff = 0.0;
  double tail_diff = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Vector head = rng.next_vector(k);
    head_diff = std::max(
        head_diff,
        std::abs(lifted(embed(head, total_dim)) - block_norm(head)));
    Vector tail = rng.next_vector(total_dim - k);
    tail_diff = std::max(
        tail_diff, std::abs(lifted(embed(tail, total_dim, k)) -
                            base_lur_norm(tail, block_cfg.p)));
  }
  report.add("block-restriction-max-diff", head_diff, 1e-12,
             1e-12 - head_diff);
  report.add("complement-max-diff", tail_diff, 1e-12, 1e-12 - tail_diff);

  double defect_diff = 0.0;
  double normsq_diff = 0.0;
  double dist_diff = 0.0;
  for (std::size_t n = 1; n <= witness_max; ++n) {
    WitnessTriple w = lur_witness(n, k);
    Vector x0L = embed(w.x0, total_dim);
    Vector xnL = embed(w.xn, total_dim);
    defect_diff = std::max(defect_diff,
                           std::abs(midpoint_defect(lifted, x0L, xnL) -
                                    midpoint_defect(block_norm, w.x0, w.xn)));
    double a = lifted(xnL);
    double b = block_norm(w.xn);
    normsq_diff = std::max(normsq_diff, std::abs(a * a - b * b));
    dist_diff = std::max(dist_diff, std::abs(lifted(xnL - x0L) -
                                             block_norm(w.xn - w.x0)));
  }
  report.add("witness-defect-max-diff", defect_diff, 1e-9, 1e-9 - defect_diff);
  report.add("witness-normsq-max-diff", normsq_diff, 1e-9, 1e-9 - normsq_diff);
  report.add("witness-distance-max-diff", dist_diff, 1e-9, 1e-9 - dist_diff);
  return report;
}

ProbeReport oracle_suite(const SplitNormSpec& spec, std::size_t points,
                         std::uint64_t seed, double target_acc) {
  if (points < 1) throw ConfigError("oracle_suite: needs points >= 1");
  ProbeReport report;
  report.name = "oracle";
  report.model.dim = spec.dim;
  report.model.p = spec.p;
  report.model.tol = target_acc;
  report.model.seed = seed;

  std::vector<Vector> xs(points);
  {
    GaussianSource rng(seed);
    for (auto& x : xs) {
      x = rng.next_vector(spec.dim);
      double s = l2_norm(x);
      if (s > 0.0) x *= 1.0 / s;
    }
  }
  std::vector<double> diff(points, 0.0);
  std::vector<double> width(points, 0.0);
  std::vector<double> evals(points, 0.0);
  detail::parallel_for(points, [&](std::size_t i) {
    double g = hull_gauge(xs[i], spec).value;
    OracleResult o = brute_force_gauge(xs[i], spec, target_acc);
    diff[i] = std::abs(g - o.value);
    width[i] = o.upper - o.lower;
    evals[i] = double(o.evals);
  });
  double max_diff = 0.0;
  double max_width = 0.0;
  double total_evals = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    max_diff = std::max(max_diff, diff[i]);
    max_width = std::max(max_width, width[i]);
    total_evals += evals[i];
  }
  report.add("points", double(points), double(points), 0.0);
  report.add("max-abs-diff", max_diff, target_acc, target_acc - max_diff);
  report.add("max-enclosure-width", max_width, target_acc,
             target_acc - max_width);
  report.add("oracle-evals", total_evals, 0.0, total_evals);
  return report;
}

}  // namespace renorm
