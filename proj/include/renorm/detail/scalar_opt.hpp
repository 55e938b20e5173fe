#ifndef RENORM_DETAIL_SCALAR_OPT_HPP
#define RENORM_DETAIL_SCALAR_OPT_HPP

#include <cmath>
#include <utility>

namespace renorm::detail {

struct ScalarMin {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Golden-section minimization of a unimodal (e.g. convex) function on
/// [a, b].  Endpoint minima are recovered by the final candidate sweep.
template <class F>
ScalarMin golden_section_min(F&& f, double a, double b, double xtol,
                             int max_iter = 200) {
  const double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iters = 0;
  while (b - a > xtol && iters < max_iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++iters;
  }
  ScalarMin out;
  out.iterations = iters;
  out.x = 0.5 * (a + b);
  out.fx = f(out.x);
  for (double cand : {a, b, c, d}) {
    double v = f(cand);
    if (v < out.fx) {
      out.fx = v;
      out.x = cand;
    }
  }
  return out;
}

/// Bisection for the unique root of an increasing function on [lo, hi].
/// Requires f(lo) <= 0 <= f(hi).
template <class F>
double bisect_increasing(F&& f, double lo, double hi, double xtol,
                         int max_iter = 200) {
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace renorm::detail

#endif  // RENORM_DETAIL_SCALAR_OPT_HPP
