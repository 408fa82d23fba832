#include "pfilm/sweep.hpp"

#include <cmath>
#include <numbers>

#include "pfilm/dispersion.hpp"

namespace pfilm {

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::omega: return "omega";
    case SweepAxis::theta_deg: return "theta_deg";
    case SweepAxis::thickness_nm: return "d_nm";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (steps < 2) throw std::invalid_argument("SweepSpec: steps must be >= 2");
  if (!(start < stop)) throw std::invalid_argument("SweepSpec: start must be < stop");
  // the swept axis is substituted per point; the rest must already be valid
  FilmProblem probe = base;
  switch (axis) {
    case SweepAxis::omega:
      if (!(start > 0.0)) throw std::invalid_argument("SweepSpec: Omega must be > 0");
      break;
    case SweepAxis::theta_deg:
      if (!(start >= 0.0) || !(stop < 90.0))
        throw std::invalid_argument("SweepSpec: theta must lie in [0, 90) degrees");
      probe.theta = 0.0;
      break;
    case SweepAxis::thickness_nm:
      if (!(start > 0.0)) throw std::invalid_argument("SweepSpec: thickness must be > 0");
      probe.d_nm = start;
      break;
  }
  probe.validate();
  if (axis != SweepAxis::omega && !(omega_fixed > 0.0))
    throw std::invalid_argument("SweepSpec: omega_fixed must be > 0");
  options.tol.validate();
}

double SweepSpec::axis_value(long i) const {
  return start + (stop - start) * double(i) / double(steps - 1);
}

SpectrumRow evaluate_point(const FilmProblem& problem, double Omega,
                           const SweepOptions& options) {
  const double nan = std::nan("");
  SpectrumRow row;
  row.Omega = Omega;
  row.T = row.R = row.A = nan;
  row.G = row.eta0 = row.sigma_ratio = Complex(nan, nan);
  row.eta0_residual = nan;

  try {
    const ReducedParams rp = reduce(problem, Omega);
    row.kl = rp.kd * problem.mean_free_path() / problem.d_cm();

    const GMethod method = options.g_method.value_or(
        Omega >= 0.9 ? GMethod::g2 : GMethod::series);

    GResult g;
    const bool needs_eta0 =
        method == GMethod::g2 || method == GMethod::quadrature;
    try {
      const DispersionContext ctx = make_dispersion_context(rp, options.tol);
      row.eta0 = ctx.eta0;
      row.eta0_residual = ctx.eta0_residual;
      g = (method == GMethod::quadrature) ? g_quadrature(ctx)
          : (method == GMethod::g2)       ? g2(ctx)
          : (method == GMethod::g1)       ? g1(rp)
                                          : g_series(rp, options.tol);
    } catch (const NumericsError&) {
      if (needs_eta0) throw;
      // eta0 is a diagnostic column only for series/g1; keep going
      g = (method == GMethod::g1) ? g1(rp) : g_series(rp, options.tol);
    }
    row.G = g.value;

    const ConductivityResult sig = sigma_d(problem, Omega);
    row.sigma_ratio = sig.sigma_d_over_sigma0;

    const Coefficients c =
        coefficients_from_parts(rp, g.value, sig, problem.theta, options.variant);
    row.T = c.T;
    row.R = c.R;
    row.A = c.A;
    if (!c.passive && row.error.empty()) row.error = "passivity monitor";
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SpectrumRow> run_sweep(const SweepSpec& spec, Execution exec) {
  spec.validate();
  std::vector<SpectrumRow> rows(spec.steps);

  const auto point = [&spec](long i) {
    const double x = spec.axis_value(i);
    FilmProblem problem = spec.base;
    double Omega = spec.omega_fixed;
    switch (spec.axis) {
      case SweepAxis::omega: Omega = x; break;
      case SweepAxis::theta_deg: problem.theta = x * std::numbers::pi / 180.0; break;
      case SweepAxis::thickness_nm: problem.d_nm = x; break;
    }
    SpectrumRow row = evaluate_point(problem, Omega, spec.options);
    row.axis = x;
    return row;
  };

  if (exec == Execution::serial) {
    for (long i = 0; i < spec.steps; ++i) rows[i] = point(i);
    return rows;
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < spec.steps; ++i) rows[i] = point(i);
  return rows;
}

}  // namespace pfilm
