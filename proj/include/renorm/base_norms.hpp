#ifndef RENORM_BASE_NORMS_HPP
#define RENORM_BASE_NORMS_HPP

#include "renorm/types.hpp"

namespace renorm {

/// Shape of the split norm: dimension of the truncation and the exponent of
/// the p-norm applied past coordinate 1.
struct SplitNormSpec {
  std::size_t dim = 64;
  double p = 2.0;

  static SplitNormSpec from(const ModelConfig& cfg) { return {cfg.dim, cfg.p}; }
};

/// Plain p-norm of the coordinates.  Throws ConfigError for p <= 1.
double base_lur_norm(const Vector& x, double p);

/// Zeroes coordinate 1, keeps the rest.
Vector q1_project(const Vector& x);

/// sqrt( base_lur_norm(q1_project(x), p)^2 + x_1^2 ).  Computed through the
/// two-block formula for every p, including p = 2 where it happens to agree
/// with the Euclidean norm.
double split_norm(const Vector& x, const SplitNormSpec& spec);

/// Gradient of the split norm at x != 0.  Where the tail block vanishes the
/// one-sided choice along coordinate 1 is returned; never call it at 0.
Functional split_norm_gradient(const Vector& x, const SplitNormSpec& spec);

/// Dual norm of the split norm, by the two-block conjugate formula.
double dual_norm_base_analytic(const Functional& f, const SplitNormSpec& spec);

/// Dual norm of the split norm.  Returns the analytic value after an
/// independent projected-ascent estimate over the primal sphere confirms it;
/// a relative gap above 1e-6 raises NumericalError.
double dual_norm_base(const Functional& f, const SplitNormSpec& spec,
                      int budget = 400);

/// Weighted-l1 example norm: sum |x_n| + sqrt( sum x_n^2 / n^2 ).  Defined
/// for any vector length, independent of the model dimension.
double troyanski_l1_norm(const Vector& x);

}  // namespace renorm

#endif  // RENORM_BASE_NORMS_HPP
