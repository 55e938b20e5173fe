#ifndef RENORM_HULL_GAUGE_HPP
#define RENORM_HULL_GAUGE_HPP

#include <optional>

#include "renorm/base_norms.hpp"
#include "renorm/types.hpp"

namespace renorm {

/// Diagonal compression operator: weight sqrt(2) on coordinate 1 and 1/n^2
/// on coordinate n >= 2.  Its image of the Euclidean ball is the flat
/// ellipsoid whose hull with the split ball is gauged below.
struct TOperatorSpec {
  std::vector<double> weights;

  static TOperatorSpec standard(std::size_t dim);
};

/// Coordinate-wise application of the compression to a coefficient vector.
Vector t_apply(const Vector& alpha, const TOperatorSpec& op);

/// Norm transported from the Euclidean ball by the compression:
/// the gauge of the ellipsoid, sqrt( (y_1/sqrt2)^2 + sum (n^2 y_n)^2 ).
double theta_norm(const Vector& y, const TOperatorSpec& op);

/// Outcome of one gauge evaluation.  When value > 0 the decomposition
/// x = u + v realizes the infimal convolution (u priced by the split norm,
/// v by the ellipsoid norm), lambda = split(u)/value, and b, c are the unit
/// factors of x/value on the two spheres where defined.  The certificate is
/// a dual functional with support 1 over the hull whose pairing with x
/// matches value up to residual, which therefore bounds the true error.
struct GaugeResult {
  double value = 0.0;
  Vector u, v;
  double lambda = 0.0;
  std::optional<Vector> b, c;
  Functional certificate;
  int iterations = 0;
  double residual = 0.0;
};

/// Gauge of the hull of the split ball and the compressed ball, via direct
/// minimization of split(u) + ellipsoid-norm(x - u).  Works for every
/// exponent p > 1.  Raises NumericalError when the duality gap cannot be
/// brought below tol.
GaugeResult hull_gauge(const Vector& x, const SplitNormSpec& spec,
                       double tol = 1e-6);

/// Same gauge through the dual route available when p = 2: both bodies are
/// ellipsoids, and the support of the polar intersection reduces to a convex
/// one-dimensional minimization.  Raises UnsupportedModelError for p != 2.
GaugeResult hull_gauge_hilbert_dual(const Vector& x, const SplitNormSpec& spec,
                                    double tol = 1e-9);

/// Route dispatcher: the dual path at p = 2, the direct path otherwise.
GaugeResult hull_gauge_auto(const Vector& x, const SplitNormSpec& spec,
                            double tol = 1e-9);

/// Support function of the hull over a dual functional:
/// max of the split dual norm and the Euclidean norm of the compressed f.
double support_d(const Functional& f, const SplitNormSpec& spec);

/// Two-sphere decomposition x = lambda b + (1 - lambda) c of a point on the
/// hull boundary.  Requires gauge value 1 within tol (DomainError otherwise).
GaugeResult boundary_decompose(const Vector& x, const SplitNormSpec& spec,
                               double tol = 1e-6);

/// Gauge values at x +- t e_1 for a boundary point x; the hull admits no
/// horizontal segment through its boundary, so at least one side must exit.
struct HorizontalProbe {
  double gauge_plus = 0.0;
  double gauge_minus = 0.0;
  bool plus_out = false;
  bool minus_out = false;
};

HorizontalProbe horizontal_segment_probe(const Vector& x,
                                         const SplitNormSpec& spec, double t);

}  // namespace renorm

#endif  // RENORM_HULL_GAUGE_HPP
