#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pfilm/material.hpp"
#include "pfilm/numerics.hpp"

namespace pfilm {

/// lambda_0(z) = 1 + (z/2) Ln((z-1)/(z+1)), principal logarithm: analytic off
/// the cut [-1, 1]. For real z in (-1, 1) returns the real principal value
/// 1 + (z/2) ln((1-z)/(1+z)). A large-|z| series replaces the closed form
/// where the 1 - z*Ln cancellation would eat digits. Throws std::domain_error
/// at z = +-1.
Complex lambda0(Complex z);

/// d lambda_0 / dz = (1/2) Ln((z-1)/(z+1)) + z/(z^2 - 1), same branch rules.
Complex lambda0_prime(Complex z);

/// Dispersion function lambda(z) = lambda1 - (z^2 - ac) lambda0(z).
/// Even in z; tends to lambda_inf as |z| -> infinity.
Complex lambda_value(Complex z, const ReducedParams& rp);

/// lambda'(z) = -2 z lambda0(z) - (z^2 - ac) lambda0'(z).
Complex lambda_prime(Complex z, const ReducedParams& rp);

/// Boundary values on the cut: lambda_pm = lambda1 - (tau^2 - ac)(lambda0(tau) +- i pi tau / 2),
/// requested for tau in (0, 1).
std::pair<Complex, Complex> lambda_pm(double tau, const ReducedParams& rp);

/// Pole ladder of tanh(z0/eta): eta_k* = -2 z0 i / (pi (2k+1)), so that
/// z0/eta_k* = i pi (2k+1)/2 exactly.
Complex eta_star(long k, const ReducedParams& rp);

/// Continuous branch of G_l(tau) = ln(lambda+ / lambda-) on (0, 1), anchored
/// at G_l(0+) = 0. Tabulated on a base grid (uniform up to 0.9, geometric
/// refinement toward the logarithmic endpoint tau = 1); arbitrary tau is
/// evaluated exactly, with the branch offset taken from the nearest grid
/// node. Construction throws BranchError if lambda+- vanishes on the grid.
class GlTable {
public:
  explicit GlTable(const ReducedParams& rp, std::size_t base_points = 4096);

  Complex operator()(double tau) const;

  /// Accumulated phase at the last grid node divided by 2 pi. Rounds to the
  /// number of discrete zero pairs of lambda (argument principle).
  double winding() const { return phase_.back() / (2.0 * 3.14159265358979323846); }

  const std::vector<double>& grid() const { return tau_; }

private:
  ReducedParams rp_;
  std::vector<double> tau_;
  std::vector<Complex> ratio_;  // lambda+/lambda- at the nodes
  std::vector<double> phase_;   // unwrapped arg of ratio_
};

/// Everything eta0-related for one (Omega, eps): the factorization seed from
/// the integral formula, the Newton-polished zero, and the G_l table that
/// produced it.
struct DispersionContext {
  ReducedParams rp;
  Complex eta0;           // polished zero, Re >= 0 branch
  double eta0_residual;   // |lambda(eta0)| achieved
  Complex eta0_seed;      // integral-formula value before polishing
  double winding;         // from the G_l table
  GlTable gl;
};

/// Computes eta0: evaluates the factorization integral for eta0^2, takes the
/// Re >= 0 square root, then Newton-polishes on lambda. Throws NoDiscreteZero
/// when the winding of G_l reports no zero pair, RootError (with the seed as
/// the carried iterate) when polishing fails.
DispersionContext make_dispersion_context(const ReducedParams& rp,
                                          const Tolerance& tol = {});

/// Factorization factor X(z) = exp(V0(z))/(z - 1) with
/// V0(z) = (1/2 pi i) Int_0^1 G_l(tau)/(tau - z) dtau, for z off [0, 1].
/// lambda(z) = lambda_inf (eta0^2 - z^2) X(z) X(-z) reconstructs the
/// dispersion function.
Complex factorization_X(Complex z, const GlTable& gl, const ReducedParams& rp,
                        const Tolerance& tol = {});

}  // namespace pfilm
