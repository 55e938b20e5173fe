#pragma once

#include <cstddef>
#include <vector>

#include "renorm/base_norms.hpp"
#include "renorm/hull_gauge.hpp"
#include "renorm/types.hpp"

namespace renorm {

/// The renormed space at a fixed configuration: hull gauge squared plus a
/// weighted series of squared normalized coordinate functionals.
class FinalModel {
 public:
  explicit FinalModel(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const SplitNormSpec& split_spec() const { return split_; }
  const TOperatorSpec& t_spec() const { return t_; }
  const std::vector<double>& functional_normalizers() const {
    return normalizers_;
  }

  double gauge(const Vector& x) const;
  GaugeResult gauge_result(const Vector& x) const;
  double tail_term(const Vector& x) const;
  double norm(const Vector& x) const;
  NormHandle handle(NormTag tag) const;

 private:
  ModelConfig cfg_;
  SplitNormSpec split_;
  TOperatorSpec t_;
  std::vector<double> normalizers_;
  std::vector<double> series_;
};

struct DualEstimate {
  double lower = 0.0;
  double upper = 0.0;
  bool flagged = false;
  Vector argmax;
};

/// Supporting functional of the norm at a unit vector, recovered by central
/// differences over a step schedule with a stability cut between successive
/// steps; the smallest stable step wins.
Functional support_functional(const FinalModel& model, const Vector& x);
Functional support_functional(const FinalModel& model, const Vector& x,
                              const std::vector<double>& h_schedule);

/// Dual norm estimate: certified lower bound by projected ascent over the
/// unit sphere with `budget` restarts, upper bound from the hull support;
/// flagged when the enclosure is wider than 1e-3.
DualEstimate dual_norm_final(const FinalModel& model, const Functional& f,
                             int budget = 12);

/// Direct-sum norm: the leading block carries the renormed model, the
/// complement keeps the canonical p-norm, and squares add.
double lift_direct_sum(const FinalModel& block_model, const Vector& x);
NormHandle make_lifted_handle(FinalModel block_model, std::size_t total_dim);

}  // namespace renorm
