#include "renorm/hull_gauge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "renorm/detail/lbfgs.hpp"
#include "renorm/detail/scalar_opt.hpp"

namespace renorm {

TOperatorSpec TOperatorSpec::standard(std::size_t dim) {
  TOperatorSpec op;
  op.weights.resize(dim);
  if (dim > 0) op.weights[0] = std::sqrt(2.0);
  for (std::size_t n = 2; n <= dim; ++n)
    op.weights[n - 1] = 1.0 / (double(n) * double(n));
  return op;
}

Vector t_apply(const Vector& alpha, const TOperatorSpec& op) {
  if (alpha.dim() != op.weights.size())
    throw DimensionError("t_apply: coefficient length mismatch");
  Vector y(alpha.dim());
  for (std::size_t i = 0; i < alpha.dim(); ++i) y[i] = op.weights[i] * alpha[i];
  return y;
}

double theta_norm(const Vector& y, const TOperatorSpec& op) {
  if (y.dim() != op.weights.size())
    throw DimensionError("theta_norm: vector length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < y.dim(); ++i) {
    double t = y[i] / op.weights[i];
    s += t * t;
  }
  return std::sqrt(s);
}

double support_d(const Functional& f, const SplitNormSpec& spec) {
  if (f.dim() != spec.dim)
    throw DimensionError("support_d: functional length mismatch");
  TOperatorSpec op = TOperatorSpec::standard(spec.dim);
  double s = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    double t = op.weights[i] * f[i];
    s += t * t;
  }
  return std::max(dual_norm_base_analytic(f, spec), std::sqrt(s));
}

namespace {

GaugeResult zero_result(std::size_t dim) {
  GaugeResult r;
  r.u = Vector(dim);
  r.v = Vector(dim);
  r.certificate = Functional(dim);
  return r;
}

/// Dual functional of the ellipsoid norm at v != 0 (its gradient).
Functional theta_side_functional(const Vector& v, const TOperatorSpec& op,
                                 double theta_val) {
  Functional f(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    f[i] = v[i] / (op.weights[i] * op.weights[i] * theta_val);
  return f;
}

struct CertifiedValue {
  Functional certificate;
  double pairing = 0.0;  // against the normalized input
};

/// Scales a raw dual functional to support exactly 1 over the hull and
/// evaluates its pairing; the pairing is then a certified lower gauge bound.
CertifiedValue certify(const Functional& raw, const Vector& z,
                       const SplitNormSpec& spec) {
  CertifiedValue out;
  double h = support_d(raw, spec);
  out.certificate = Functional(z.dim());
  if (!(h > 0.0)) return out;
  for (std::size_t i = 0; i < z.dim(); ++i) out.certificate[i] = raw[i] / h;
  out.pairing = pair(out.certificate, z);
  return out;
}

struct DecompositionCandidate {
  Vector u;          // split-priced part of the normalized input
  double value = 0;  // split(u) + theta(z - u)
  int iterations = 0;
};

/// Direct minimization of split(z - T beta) + |beta|_2 by smoothed L-BFGS
/// continuation.  The compression pre-conditions the ellipsoid block, so the
/// stiff n^4 weights never enter the optimizer's metric.
DecompositionCandidate solve_from_start(const Vector& z,
                                        const SplitNormSpec& spec,
                                        const TOperatorSpec& op,
                                        std::vector<double> beta,
                                        const std::vector<double>& eps_stages,
                                        int max_iter) {
  const std::size_t n = z.dim();
  DecompositionCandidate cand;
  for (double eps : eps_stages) {
    auto objective = [&](const std::vector<double>& b,
                         std::vector<double>& grad) -> double {
      std::vector<double> ubuf(n);
      for (std::size_t i = 0; i < n; ++i) ubuf[i] = z[i] - op.weights[i] * b[i];
      Vector u(std::move(ubuf));
      double r1 = split_norm(u, spec);
      double r2sq = 0.0;
      for (double bi : b) r2sq += bi * bi;
      double r2 = std::sqrt(r2sq);
      double m1 = std::sqrt(r1 * r1 + eps * eps);
      double m2 = std::sqrt(r2sq + eps * eps);
      if (r1 > 0.0) {
        Functional gs = split_norm_gradient(u, spec);
        double f1 = r1 / m1;
        for (std::size_t i = 0; i < n; ++i)
          grad[i] = -op.weights[i] * gs[i] * f1 + b[i] / m2;
      } else {
        for (std::size_t i = 0; i < n; ++i) grad[i] = b[i] / m2;
      }
      (void)r2;
      return m1 + m2;
    };
    detail::LbfgsOptions opt;
    opt.max_iter = max_iter;
    opt.grad_tol = 1e-11;
    auto outcome = detail::lbfgs_minimize(objective, std::move(beta), opt);
    beta = std::move(outcome.x);
    cand.iterations += outcome.iterations;
  }

  Vector u(z.dim());
  for (std::size_t i = 0; i < n; ++i) u[i] = z[i] - op.weights[i] * beta[i];
  Vector v = z - u;
  cand.value = split_norm(u, spec) + theta_norm(v, op);
  cand.u = std::move(u);
  return cand;
}

GaugeResult assemble(const Vector& x, double scale, const Vector& u_n,
                     double value_n, CertifiedValue cert, int iterations,
                     const SplitNormSpec& spec, const TOperatorSpec& op,
                     double snap_tol) {
  GaugeResult r;
  r.value = scale * value_n;
  r.u = Vector(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r.u[i] = scale * u_n[i];
  r.v = x - r.u;
  r.certificate = std::move(cert.certificate);
  r.residual = scale * (value_n - cert.pairing);
  r.iterations = iterations;

  double su = split_norm(r.u, spec);
  double tv = theta_norm(r.v, op);
  double snap = snap_tol * scale;
  if (su < snap) {
    r.lambda = 0.0;
  } else if (tv < snap) {
    r.lambda = 1.0;
  } else {
    r.lambda = std::clamp(su / r.value, 0.0, 1.0);
  }
  if (su >= snap) {
    Vector b = r.u;
    for (std::size_t i = 0; i < b.dim(); ++i) b[i] /= su;
    r.b = std::move(b);
  }
  if (tv >= snap) {
    Vector c = r.v;
    for (std::size_t i = 0; i < c.dim(); ++i) c[i] /= tv;
    r.c = std::move(c);
  }
  return r;
}

}  // namespace

GaugeResult hull_gauge(const Vector& x, const SplitNormSpec& spec, double tol) {
  if (x.dim() != spec.dim)
    throw DimensionError("hull_gauge: vector length mismatch");
  if (!(spec.p > 1.0)) throw ConfigError("hull_gauge: exponent must exceed 1");
  double scale = l2_norm(x);
  if (!(scale > 0.0)) return zero_result(x.dim());

  Vector z = x;
  for (std::size_t i = 0; i < z.dim(); ++i) z[i] /= scale;
  TOperatorSpec op = TOperatorSpec::standard(spec.dim);
  const std::size_t n = z.dim();

  // Exact endpoint decompositions; the solver must beat them to matter.
  double split_val = split_norm(z, spec);
  double theta_val = theta_norm(z, op);

  auto starts_basic = [&]() {
    std::vector<std::vector<double>> starts;
    std::vector<double> half(n);
    for (std::size_t i = 0; i < n; ++i) half[i] = 0.5 * z[i] / op.weights[i];
    starts.push_back(std::move(half));
    std::vector<double> head(n, 0.0);
    head[0] = 0.5 * z[0] / op.weights[0];
    starts.push_back(std::move(head));
    return starts;
  };

  int iterations = 0;
  Vector best_u = z;  // pure split by default
  double best_value = split_val;
  if (theta_val < best_value) {
    best_value = theta_val;
    best_u = Vector(n);
  }

  auto run_attempt = [&](const std::vector<std::vector<double>>& starts,
                         const std::vector<double>& eps_stages, int max_iter) {
    for (const auto& b0 : starts) {
      auto cand = solve_from_start(z, spec, op, b0, eps_stages, max_iter);
      iterations += cand.iterations;
      if (cand.value < best_value) {
        best_value = cand.value;
        best_u = std::move(cand.u);
      }
    }
  };

  auto best_certificate = [&]() -> CertifiedValue {
    CertifiedValue best;
    Vector v = z - best_u;
    double su = split_norm(best_u, spec);
    double tv = theta_norm(v, op);
    std::vector<Functional> raws;
    if (su > 1e-12) raws.push_back(split_norm_gradient(best_u, spec));
    if (tv > 1e-12) raws.push_back(theta_side_functional(v, op, tv));
    raws.push_back(split_norm_gradient(z, spec));
    if (theta_val > 0.0) raws.push_back(theta_side_functional(z, op, theta_val));
    for (const auto& raw : raws) {
      CertifiedValue c = certify(raw, z, spec);
      if (c.pairing > best.pairing) best = std::move(c);
    }
    return best;
  };

  run_attempt(starts_basic(), {1e-3, 1e-6, 1e-9}, 400);
  CertifiedValue cert = best_certificate();

  if (best_value - cert.pairing > tol) {
    // Harder retry: deeper smoothing ladder and randomized coordinate splits.
    auto starts = starts_basic();
    GaussianSource rng(0x5eed5eedULL);
    for (int k = 0; k < 4; ++k) {
      std::vector<double> b0(n);
      for (std::size_t i = 0; i < n; ++i) {
        double r = 1.0 / (1.0 + std::exp(-rng.next()));
        b0[i] = r * z[i] / op.weights[i];
      }
      starts.push_back(std::move(b0));
    }
    run_attempt(starts, {1e-3, 1e-5, 1e-8, 1e-11}, 2000);
    cert = best_certificate();
  }

  double gap = best_value - cert.pairing;
  if (gap > tol) {
    std::ostringstream msg;
    msg << "hull_gauge: duality gap " << gap << " above tolerance " << tol
        << " after " << iterations << " iterations (value " << scale * best_value
        << ", certified lower bound " << scale * cert.pairing << ")";
    throw NumericalError(msg.str());
  }
  return assemble(x, scale, best_u, best_value, std::move(cert), iterations,
                  spec, op, std::max(tol, 1e-9));
}

GaugeResult hull_gauge_hilbert_dual(const Vector& x, const SplitNormSpec& spec,
                                    double tol) {
  if (spec.p != 2.0)
    throw UnsupportedModelError(
        "hull_gauge_hilbert_dual: dual route requires exponent 2");
  if (x.dim() != spec.dim)
    throw DimensionError("hull_gauge_hilbert_dual: vector length mismatch");
  double scale = l2_norm(x);
  if (!(scale > 0.0)) return zero_result(x.dim());

  Vector z = x;
  for (std::size_t i = 0; i < z.dim(); ++i) z[i] /= scale;
  TOperatorSpec op = TOperatorSpec::standard(spec.dim);
  const std::size_t n = z.dim();

  std::vector<double> wsq(n);
  for (std::size_t i = 0; i < n; ++i) wsq[i] = op.weights[i] * op.weights[i];

  // Support of the polar intersection: a convex scalar profile over the
  // mixing weight between the two ellipsoid quadratic forms.
  auto profile = [&](double mu) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += z[i] * z[i] / (mu + (1.0 - mu) * wsq[i]);
    return s;
  };

  // The profile's derivative is the negative of this strictly decreasing
  // balance function, so the minimizer is its sign change (or an endpoint).
  // Pinning the root by bisection balances the two quadratic means to
  // machine precision, which is what makes the certificate below tight.
  auto balance = [&](double mu) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = mu + (1.0 - mu) * wsq[i];
      s += z[i] * z[i] * (1.0 - wsq[i]) / (m * m);
    }
    return s;
  };

  double mu = 0.0;
  int iterations = 0;
  if (balance(0.0) <= 0.0) {
    mu = 0.0;
  } else if (balance(1.0) >= 0.0) {
    mu = 1.0;
  } else {
    const int steps = 200;
    mu = detail::bisect_increasing([&](double m) { return -balance(m); }, 0.0,
                                   1.0, 0.0, steps);
    iterations = steps;
  }
  double phi = profile(mu);

  double value_n = std::sqrt(phi);
  Vector u_n(n);
  Functional raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    double m = mu + (1.0 - mu) * wsq[i];
    u_n[i] = mu * z[i] / m;
    raw[i] = z[i] / (m * value_n);
  }
  CertifiedValue cert = certify(raw, z, spec);
  double gap = value_n - cert.pairing;
  if (gap > tol) {
    std::ostringstream msg;
    msg << "hull_gauge_hilbert_dual: certificate gap " << gap
        << " above tolerance " << tol << " (value " << scale * value_n << ")";
    throw NumericalError(msg.str());
  }
  return assemble(x, scale, u_n, value_n, std::move(cert), iterations, spec,
                  op, std::max(tol, 1e-9));
}

GaugeResult hull_gauge_auto(const Vector& x, const SplitNormSpec& spec,
                            double tol) {
  if (spec.p == 2.0) return hull_gauge_hilbert_dual(x, spec, tol);
  return hull_gauge(x, spec, std::max(tol, 1e-6));
}

GaugeResult boundary_decompose(const Vector& x, const SplitNormSpec& spec,
                               double tol) {
  GaugeResult g = hull_gauge_auto(x, spec, std::min(tol, 1e-6));
  if (std::abs(g.value - 1.0) > tol)
    throw DomainError("boundary_decompose: gauge value " +
                      std::to_string(g.value) + " is not 1 within tolerance");
  return g;
}

HorizontalProbe horizontal_segment_probe(const Vector& x,
                                         const SplitNormSpec& spec, double t) {
  if (!(t > 0.0)) throw DomainError("horizontal_segment_probe: t must be positive");
  Vector e1 = unit_vector(1, x.dim());
  HorizontalProbe probe;
  probe.gauge_plus = hull_gauge_auto(x + t * e1, spec).value;
  probe.gauge_minus = hull_gauge_auto(x - t * e1, spec).value;
  probe.plus_out = probe.gauge_plus > 1.0;
  probe.minus_out = probe.gauge_minus > 1.0;
  return probe;
}

}  // namespace renorm
