#ifndef RENORM_DETAIL_LBFGS_HPP
#define RENORM_DETAIL_LBFGS_HPP

#include <cmath>
#include <cstddef>
#include <deque>
#include <vector>

namespace renorm::detail {

struct LbfgsOptions {
  int max_iter = 500;
  double grad_tol = 1e-11;
  int memory = 10;
};

struct LbfgsOutcome {
  std::vector<double> x;
  double f = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Limited-memory BFGS with Armijo backtracking.  The callable evaluates the
/// objective at x and fills grad; it is assumed smooth on the iterates.
template <class FG>
LbfgsOutcome lbfgs_minimize(FG&& fg, std::vector<double> x0,
                            const LbfgsOptions& opt = {}) {
  const std::size_t n = x0.size();
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };

  std::vector<double> x = std::move(x0), g(n), xn(n), gn(n), d(n);
  double f = fg(x, g);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  LbfgsOutcome out;
  int it = 0;
  for (; it < opt.max_iter; ++it) {
    double gnorm = std::sqrt(dot(g, g));
    if (gnorm <= opt.grad_tol) {
      out.converged = true;
      break;
    }

    // Two-loop recursion for the search direction.
    d = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * dot(s_hist[k], d);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[k] * y_hist[k][i];
    }
    if (!y_hist.empty()) {
      double yy = dot(y_hist.back(), y_hist.back());
      double sy = dot(s_hist.back(), y_hist.back());
      double h0 = sy / yy;
      for (std::size_t i = 0; i < n; ++i) d[i] *= h0;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      double beta = rho_hist[k] * dot(y_hist[k], d);
      for (std::size_t i = 0; i < n; ++i)
        d[i] += (alpha[k] - beta) * s_hist[k][i];
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = -d[i];

    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      // Stale curvature pairs can spoil the direction; fall back to descent.
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = -gnorm * gnorm;
    }

    double step = it == 0 ? 1.0 / std::max(1.0, gnorm) : 1.0;
    double fn = f;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + step * d[i];
      fn = fg(xn, gn);
      if (fn <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> sv(n), yv(n);
    for (std::size_t i = 0; i < n; ++i) {
      sv[i] = xn[i] - x[i];
      yv[i] = gn[i] - g[i];
    }
    double sy = dot(sv, yv);
    double ss = std::sqrt(dot(sv, sv));
    double yy = std::sqrt(dot(yv, yv));
    if (sy > 1e-12 * ss * yy) {
      s_hist.push_back(std::move(sv));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (int(s_hist.size()) > opt.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(xn);
    g.swap(gn);
    f = fn;
  }

  out.x = std::move(x);
  out.f = f;
  out.grad_norm = std::sqrt(dot(g, g));
  out.iterations = it;
  if (out.grad_norm <= opt.grad_tol) out.converged = true;
  return out;
}

}  // namespace renorm::detail

#endif  // RENORM_DETAIL_LBFGS_HPP
