#pragma once

#include "pfilm/dispersion.hpp"

namespace pfilm {

enum class GMethod { quadrature, series, g1, g2 };

const char* to_string(GMethod m);

struct GResult {
  Complex value;
  GMethod method;
  long terms_or_evals = 0;
  double error_estimate = 0.0;  // numerical estimate; 0 for the closed forms g1/g2
};

/// In-film electric field profile e(x), x/d in [0, 1]:
///   e = cosh[z0 (2x-d)/(eta1 d)]/cosh(z0/eta1)
///       - (2 lambda1 / z0) Sum_{k>=0} eta_k*^3 cos[pi(2k+1)(2x-d)/(2d)]
///                                     / (lambda(eta_k*)(eta_k*^2 - eta1^2) i (-1)^k),
/// where sinh(z0/eta_k*) = i(-1)^k collapsed the hyperbolic factor. The
/// cosine terms decay like 1/k with alternating phase, so consecutive terms
/// are summed in pairs to restore absolute convergence. Symmetric in
/// x -> d - x by construction.
Complex field_profile(double x_over_d, const ReducedParams& rp,
                      const Tolerance& tol = {});

/// Default tolerance for the continuous-spectrum integral: tanh(z0/eta) has
/// O(|Im z0|) near-pole spikes on (0,1), each of which the adaptive rule must
/// resolve.
inline Tolerance g_quadrature_tolerance() { return Tolerance{1e-9, 1e-12, 2000000}; }

/// Field-average factor G via the spectral decomposition:
///   G = lambda1/lambda_inf
///       + 2 lambda1 eta0^2 tanh(z0/eta0) / (z0 (ac - eta0^2) lambda'(eta0))
///       + (lambda1 / 2 z0) Int_{-1}^{1} tanh(z0/eta) eta^3 / (lambda+ lambda-) d eta.
/// The integrand is even, so it is computed on (0,1) and doubled.
GResult g_quadrature(const DispersionContext& ctx,
                     const Tolerance& tol = g_quadrature_tolerance());

/// G via the residue series:
///   G = (eta1/z0) tanh(z0/eta1)
///       - (2 lambda1 / z0^2) Sum_{k>=0} eta_k*^4 / (lambda(eta_k*)(eta_k*^2 - eta1^2)).
/// Equal to g_quadrature by the residue theorem; needs no eta0.
GResult g_series(const ReducedParams& rp, const Tolerance& tol = {});

/// One-term truncation of the series (k = 0 only).
GResult g1(const ReducedParams& rp);

/// Drude + Debye discrete-spectrum approximation (the first two terms of the
/// decomposition; drops the continuous spectrum).
GResult g2(const DispersionContext& ctx);

/// O = |G_ref - G_approx| / |G_ref| * 100 %.
double relative_error_percent(const GResult& g_ref, const GResult& g_approx);

}  // namespace pfilm
