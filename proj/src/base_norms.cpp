#include "renorm/base_norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace renorm {

double base_lur_norm(const Vector& x, double p) {
  if (!(p > 1.0)) throw ConfigError("exponent p must be strictly above 1");
  if (p == 2.0) {
    double s = 0.0;
    for (double v : x.coords()) s += v * v;
    return std::sqrt(s);
  }
  double m = 0.0;
  for (double v : x.coords()) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x.coords()) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

Vector q1_project(const Vector& x) {
  Vector y = x;
  if (y.dim() > 0) y[0] = 0.0;
  return y;
}

double split_norm(const Vector& x, const SplitNormSpec& spec) {
  if (x.dim() != spec.dim)
    throw DimensionError("split_norm: vector length " + std::to_string(x.dim()) +
                         " does not match model dim " + std::to_string(spec.dim));
  double tail = base_lur_norm(q1_project(x), spec.p);
  double head = x.dim() > 0 ? x[0] : 0.0;
  return std::sqrt(tail * tail + head * head);
}

Functional split_norm_gradient(const Vector& x, const SplitNormSpec& spec) {
  double n = split_norm(x, spec);
  Functional g(x.dim());
  if (!(n > 0.0)) {
    g[0] = 1.0;
    return g;
  }
  Vector tail = q1_project(x);
  double a = base_lur_norm(tail, spec.p);
  g[0] = x[0] / n;
  if (a > 0.0) {
    double scale = std::pow(a, 2.0 - spec.p) / n;
    for (std::size_t i = 1; i < x.dim(); ++i) {
      if (x[i] == 0.0) continue;
      double mag = std::pow(std::abs(x[i]), spec.p - 1.0);
      g[i] = (x[i] > 0.0 ? mag : -mag) * scale;
    }
  }
  return g;
}

double dual_norm_base_analytic(const Functional& f, const SplitNormSpec& spec) {
  if (f.dim() != spec.dim)
    throw DimensionError("dual_norm_base: functional length mismatch");
  double q = spec.p / (spec.p - 1.0);
  Vector tail(std::vector<double>(f.coords()));
  tail[0] = 0.0;
  double tail_dual = base_lur_norm(tail, q);
  double head = f[0];
  return std::sqrt(tail_dual * tail_dual + head * head);
}

namespace {

/// Monotone ascent for sup { <f, x> : split_norm(x) <= 1 }, independent of
/// the conjugate formula: walks the sphere along the tangent component of f
/// with an adaptive step, renormalizing after each move.
double split_sup_by_ascent(const Functional& f, const SplitNormSpec& spec,
                           int budget) {
  Vector x(std::vector<double>(f.coords()));
  double n0 = split_norm(x, spec);
  if (!(n0 > 0.0)) return 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] /= n0;
  double best = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) best += f[i] * x[i];
  double step = 1.0;
  for (int k = 0; k < budget && step > 1e-14; ++k) {
    Functional grad = split_norm_gradient(x, spec);
    double fx = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) fx += f[i] * x[i];
    Vector z = x;
    for (std::size_t i = 0; i < z.dim(); ++i)
      z[i] += step * (f[i] - fx * grad[i]);
    double nz = split_norm(z, spec);
    if (!(nz > 0.0)) {
      step *= 0.5;
      continue;
    }
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] /= nz;
    double v = 0.0;
    for (std::size_t i = 0; i < z.dim(); ++i) v += f[i] * z[i];
    if (v > best) {
      best = v;
      x = z;
      step *= 1.3;
    } else {
      step *= 0.5;
    }
  }
  return best;
}

}  // namespace

double dual_norm_base(const Functional& f, const SplitNormSpec& spec,
                      int budget) {
  double analytic = dual_norm_base_analytic(f, spec);
  if (analytic == 0.0) return 0.0;
  double ascent = split_sup_by_ascent(f, spec, budget);
  double gap = std::abs(analytic - ascent) / analytic;
  if (gap > 1e-6)
    throw NumericalError(
        "dual_norm_base: ascent cross-check disagrees with conjugate formula "
        "(analytic " + std::to_string(analytic) + ", ascent " +
        std::to_string(ascent) + ", relative gap " + std::to_string(gap) + ")");
  return analytic;
}

double troyanski_l1_norm(const Vector& x) {
  double abs_sum = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double n = double(i + 1);
    abs_sum += std::abs(x[i]);
    quad += (x[i] / n) * (x[i] / n);
  }
  return abs_sum + std::sqrt(quad);
}

}  // namespace renorm
