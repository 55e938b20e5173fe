#include "renorm/final_norm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renorm {

FinalModel::FinalModel(const ModelConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  split_ = SplitNormSpec::from(cfg_);
  t_ = TOperatorSpec::standard(cfg_.dim);
  series_ = cfg_.series_weights();
  normalizers_.assign(cfg_.dim, 1.0);
  for (std::size_t n = 2; n <= cfg_.dim; ++n)
    normalizers_[n - 1] = dual_norm_base(unit_functional(n, cfg_.dim), split_);
}

double FinalModel::gauge(const Vector& x) const { return gauge_result(x).value; }

GaugeResult FinalModel::gauge_result(const Vector& x) const {
  return hull_gauge_auto(x, split_, cfg_.gauge_tol);
}

double FinalModel::tail_term(const Vector& x) const {
  if (x.dim() != cfg_.dim)
    throw DimensionError("tail_term: vector length mismatch");
  double s = 0.0;
  for (std::size_t n = 2; n <= cfg_.dim; ++n) {
    double t = x[n - 1] / normalizers_[n - 1];
    s += series_[n - 1] * t * t;
  }
  return s;
}

double FinalModel::norm(const Vector& x) const {
  double g = gauge(x);
  return std::sqrt(g * g + tail_term(x));
}

NormHandle FinalModel::handle(NormTag tag) const {
  NormHandle h;
  h.tag = tag;
  switch (tag) {
    case NormTag::BaseP:
      h.eval = [p = cfg_.p](const Vector& x) { return base_lur_norm(x, p); };
      break;
    case NormTag::Split:
      h.eval = [spec = split_](const Vector& x) { return split_norm(x, spec); };
      break;
    case NormTag::Theta:
      h.eval = [op = t_](const Vector& x) { return theta_norm(x, op); };
      break;
    case NormTag::HullGauge:
      h.eval = [m = *this](const Vector& x) { return m.gauge(x); };
      break;
    case NormTag::Final:
      h.eval = [m = *this](const Vector& x) { return m.norm(x); };
      break;
    case NormTag::TroyanskiL1:
      h.eval = [](const Vector& x) { return troyanski_l1_norm(x); };
      break;
    case NormTag::Lifted:
      throw ConfigError(
          "FinalModel::handle: lifted evaluator needs make_lifted_handle");
  }
  return h;
}

Functional support_functional(const FinalModel& model, const Vector& x) {
  return support_functional(model, x, model.config().fd_steps);
}

Functional support_functional(const FinalModel& model, const Vector& x,
                              const std::vector<double>& h_schedule) {
  const std::size_t dim = model.config().dim;
  if (x.dim() != dim)
    throw DimensionError("support_functional: vector length mismatch");
  if (h_schedule.empty())
    throw ConfigError("support_functional: empty step schedule");
  double nx = model.norm(x);
  if (std::abs(nx - 1.0) > 1e-6)
    throw DomainError("support_functional: input must lie on the unit sphere");

  std::vector<double> hs = h_schedule;
  std::sort(hs.begin(), hs.end(), std::greater<double>());

  std::vector<Functional> estimates;
  estimates.reserve(hs.size());
  for (double h : hs) {
    Functional f(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      Vector plus = x;
      Vector minus = x;
      plus[n] += h;
      minus[n] -= h;
      f[n] = (model.norm(plus) - model.norm(minus)) / (2.0 * h);
    }
    estimates.push_back(std::move(f));
  }

  for (std::size_t i = estimates.size() - 1; i >= 1; --i) {
    double diff = 0.0;
    for (std::size_t n = 0; n < dim; ++n)
      diff = std::max(diff, std::abs(estimates[i][n] - estimates[i - 1][n]));
    if (diff <= 1e-3) {
      Functional& f = estimates[i];
      double duality = pair(f, x);
      if (std::abs(duality - 1.0) > 1e-4) {
        std::ostringstream msg;
        msg << "support_functional: recovered functional pairs to " << duality
            << " instead of 1";
        throw NumericalError(msg.str());
      }
      return std::move(f);
    }
  }
  throw NumericalError(
      "support_functional: no adjacent steps in the schedule agree to 1e-3");
}

DualEstimate dual_norm_final(const FinalModel& model, const Functional& f,
                             int budget) {
  if (budget < 1) throw ConfigError("dual_norm_final: budget must be >= 1");
  const std::size_t dim = model.config().dim;
  if (f.dim() != dim)
    throw DimensionError("dual_norm_final: functional length mismatch");

  DualEstimate out;
  out.argmax = Vector(dim);
  if (!(l2_norm(f) > 0.0)) return out;
  out.upper = support_d(f, model.split_spec());

  Vector ascent_dir{std::vector<double>(f.coords())};
  GaussianSource rng(0xd0a1b2c3d4e5f607ULL);
  for (int k = 0; k < budget; ++k) {
    Vector start(dim);
    if (k == 0) {
      start = ascent_dir;
    } else if (k == 1) {
      start = unit_vector(1, dim);
      if (f[0] < 0.0) start *= -1.0;
    } else {
      start = rng.next_vector(dim);
    }
    double ns = model.norm(start);
    if (!(ns > 0.0)) continue;
    Vector xcur = start;
    xcur *= 1.0 / ns;
    double val = pair(f, xcur);
    double step = 0.5;
    for (int iter = 0; iter < 300 && step > 1e-13; ++iter) {
      Vector z = xcur + step * ascent_dir;
      double nz = model.norm(z);
      if (nz > 0.0) {
        z *= 1.0 / nz;
        double v = pair(f, z);
        if (v > val) {
          xcur = std::move(z);
          val = v;
          step *= 1.4;
          continue;
        }
      }
      step *= 0.5;
    }
    if (val > out.lower) {
      out.lower = val;
      out.argmax = xcur;
    }
  }
  out.flagged = (out.upper - out.lower) > 1e-3;
  return out;
}

double lift_direct_sum(const FinalModel& block_model, const Vector& x) {
  const std::size_t k = block_model.config().dim;
  if (x.dim() <= k)
    throw DimensionError(
        "lift_direct_sum: total dimension must exceed the block");
  Vector head(k);
  for (std::size_t i = 0; i < k; ++i) head[i] = x[i];
  Vector rest(x.dim() - k);
  for (std::size_t i = k; i < x.dim(); ++i) rest[i - k] = x[i];
  double a = block_model.norm(head);
  double b = base_lur_norm(rest, block_model.config().p);
  return std::sqrt(a * a + b * b);
}

NormHandle make_lifted_handle(FinalModel block_model, std::size_t total_dim) {
  if (total_dim <= block_model.config().dim)
    throw ConfigError(
        "make_lifted_handle: total dimension must exceed the block");
  NormHandle h;
  h.tag = NormTag::Lifted;
  h.eval = [m = std::move(block_model), total_dim](const Vector& x) {
    if (x.dim() != total_dim)
      throw DimensionError("lifted norm: vector length mismatch");
    return lift_direct_sum(m, x);
  };
  return h;
}

}  // namespace renorm
