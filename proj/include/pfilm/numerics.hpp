#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pfilm/errors.hpp"
#include "pfilm/types.hpp"

namespace pfilm {

struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;
  long max_evals = 200000;

  /// Throws std::invalid_argument unless rel > 0, abs >= 0, max_evals >= 64.
  void validate() const;
};

struct IntegralResult {
  Complex value;
  double error;  // reported estimate, <= max(tol.abs, tol.rel*|value|) on success
  long evals;
};

/// Adaptive Gauss-Kronrod 7/15 on (a, b). Endpoints are never evaluated, so
/// integrable endpoint singularities (log, mild power) are handled by
/// bisection toward the endpoint. Throws QuadratureError on NaN from the
/// integrand or an exhausted evaluation budget.
IntegralResult integrate_finite(const std::function<Complex(double)>& f,
                                double a, double b, const Tolerance& tol = {});

/// Integral over [a, infinity) via the substitution t = a - 1 + 1/u, u in (0,1].
/// Requires decay at least ~t^-3 (or exponential).
IntegralResult integrate_semi_infinite(const std::function<Complex(double)>& f,
                                       double a, const Tolerance& tol = {});

struct SeriesResult {
  Complex value;
  long terms_used;
  double last_term;  // |term| at the stopping index, a crude tail proxy
};

/// Sums term(0) + term(1) + ... until three consecutive terms each satisfy
/// |term| < max(tol.abs, tol.rel*|partial sum|). Three in a row guards
/// against alternating-magnitude patterns (cosine-series terms).
SeriesResult sum_series(const std::function<Complex(long)>& term,
                        const Tolerance& tol = {});

struct RootResult {
  Complex root;
  double residual;  // |f(root)|
  int iterations;
  std::vector<double> residual_history;  // accepted steps only
};

/// Damped Newton for a simple root of an analytic f. A step is accepted only
/// if it decreases |f|; on stall, derivative underflow, or step blow-up
/// throws RootError carrying the last iterate. At most 50 iterations.
RootResult newton_polish(const std::function<Complex(Complex)>& f,
                         const std::function<Complex(Complex)>& fprime,
                         Complex z_init, const Tolerance& tol = {});

/// ln g(tau) along an ordered grid with the imaginary part made continuous
/// (no 2pi jumps); the first point takes the principal branch. Throws
/// BranchError if g vanishes or a phase step reaches pi (grid too coarse).
std::vector<Complex> unwrapped_log_ratio(const std::function<Complex(double)>& g,
                                         std::span<const double> grid);

}  // namespace pfilm
