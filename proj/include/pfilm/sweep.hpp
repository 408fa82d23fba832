#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfilm/optics.hpp"

namespace pfilm {

enum class SweepAxis { omega, theta_deg, thickness_nm };

const char* to_string(SweepAxis a);

struct SweepOptions {
  Variant variant = Variant::reduced;
  std::optional<GMethod> g_method;  // empty = automatic (g2 above 0.9, series below)
  Tolerance tol;
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::omega;
  double start = 0;
  double stop = 0;
  long steps = 0;          // >= 2, inclusive endpoints
  FilmProblem base;        // axis field ignored on the swept axis
  double omega_fixed = 1;  // used when axis != omega
  SweepOptions options;

  void validate() const;
  double axis_value(long i) const;
};

/// One grid point of a sweep. A failure at the point leaves the message in
/// `error` and NaNs in the numeric fields it could not produce.
struct SpectrumRow {
  double axis = 0;
  double Omega = 0;
  double T = 0, R = 0, A = 0;
  Complex G;
  Complex eta0;
  double eta0_residual = 0;
  Complex sigma_ratio;
  double kl = 0;  // validity indicator k*l (warn-only)
  std::string error;
};

SpectrumRow evaluate_point(const FilmProblem& problem, double Omega,
                           const SweepOptions& options);

enum class Execution { serial, parallel };

/// Runs the sweep. `parallel` dispatches grid points across OpenMP threads;
/// rows are written by index so the output is identical to the serial
/// reference, which is kept for testing and benchmarking.
std::vector<SpectrumRow> run_sweep(const SweepSpec& spec,
                                   Execution exec = Execution::parallel);

}  // namespace pfilm
