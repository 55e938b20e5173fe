#pragma once

#include "renorm/base_norms.hpp"
#include "renorm/types.hpp"

namespace renorm {

struct OracleResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  long long evals = 0;
};

/// Certified gauge evaluation by exhaustive search, independent of the
/// production solvers.  Upper bound: sweep decompositions over a grid of
/// (mixing weight, split-ball direction, radius) cells, solving in closed form
/// for the largest multiple of x reachable from each cell.  Lower bound: sweep
/// dual directions and keep the best polar ratio.  Both sweeps refine locally
/// around their leaders until the enclosure is tighter than target_acc.
/// Supports dimensions 1 to 3 only (UnsupportedModelError otherwise); throws
/// NumericalError if the enclosure cannot be certified.
OracleResult brute_force_gauge(const Vector& x, const SplitNormSpec& spec,
                               double target_acc = 1e-3);

}  // namespace renorm
