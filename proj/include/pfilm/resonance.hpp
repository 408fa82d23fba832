#pragma once

#include <span>
#include <vector>

#include "pfilm/material.hpp"
#include "pfilm/numerics.hpp"

namespace pfilm {

enum class ResonanceKind { reflect_min, transmit_min, absorb_max };

struct Resonance {
  int n = 0;         // mode index
  double omega = 0;  // reduced frequency Omega_n
  double quality = 0;  // |second difference| curvature estimate at the extremum
};

struct ResonanceSet {
  ResonanceKind kind = ResonanceKind::reflect_min;
  std::vector<Resonance> entries;  // Omega_n strictly increasing
};

/// Interior local extrema by the 3-point test, refined by parabolic
/// interpolation; indices assigned sequentially from 0. Throws
/// ResonanceError when no extremum is found (monotone input).
ResonanceSet find_resonances(std::span<const double> omega,
                             std::span<const double> value, ResonanceKind kind);

/// Re-indexes detected resonances by the mode-phase ladder
/// Re(i z0/eta0) = pi/2 + pi n evaluated at the known thickness.
void index_by_phase(ResonanceSet& set, const Material& material, double eps,
                    double d_nm, const Tolerance& tol = {});

/// Film thickness (nm) from one resonance position:
///   d = 1e7 pi v_F (1 + 2n) / (omega_p Re[(Omega_n + i eps)/eta0(Omega_n, eps)]).
/// Self-checks that the returned d reproduces the phase condition
/// Re(i z0(d)/eta0) = pi/2 + pi n to 1e-6.
double thickness_from_resonance(double omega_n, int n, const Material& material,
                                double eps, const Tolerance& tol = {});

struct ThicknessFit {
  int n_offset = 0;             // fitted index of the first detected resonance
  double d_lsq = 0;             // least-squares thickness across all resonances
  std::vector<double> d_each;   // per-resonance inversions at the fitted indices
  double mean = 0;
  double spread = 0;            // standard deviation of d_each
};

/// Inversion for spectra where the comb is only partially visible: the index
/// offset of the first detected resonance is fit by least squares over the
/// phase-condition residuals, then every resonance is inverted individually.
ThicknessFit fit_thickness(const ResonanceSet& set, const Material& material,
                           double eps, int max_offset = 40,
                           const Tolerance& tol = {});

}  // namespace pfilm
