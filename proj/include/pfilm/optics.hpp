#pragma once

#include <optional>

#include "pfilm/conductivity.hpp"
#include "pfilm/fieldmode.hpp"
#include "pfilm/material.hpp"

namespace pfilm {

enum class Variant { full, reduced };

const char* to_string(Variant v);

struct Impedances {
  Complex Z1;  // symmetric-configuration surface impedance
  Complex Z2;  // antisymmetric; may be infinite in the reduced sigma_d -> 0 limit
};

/// Surface impedances from the dimensionless bundles:
///   full:    Z1 = (i kd/2)(1 - G sin^2 theta),  Z2 = 2/(i kd - 2 S)
///   reduced: Z1 = -(i kd/2) G sin^2 theta,      Z2 = -1/S
/// with S = 2 pi sigma_d d / c = rp.drude * sigma.sigma_d_over_sigma0.
Impedances impedances(const ReducedParams& rp, Complex G,
                      const ConductivityResult& sigma, double theta, Variant variant);

struct Coefficients {
  double T = 0.0;
  double R = 0.0;
  double A = 0.0;  // 1 - T - R by construction
  Variant variant = Variant::reduced;
  // diagnostics
  Complex G;
  Complex sigma_scale;  // S = 2 pi sigma_d d / c_light
  Complex Z1, Z2, P1, P2;
  bool passive = true;  // T, R in [0,1] and A >= -1e-9; monitored, not enforced
};

/// T/R/A from explicitly supplied G and conductivity (the limit-case and
/// property tests force these). P(j) = (cos theta + Z(j))/(cos theta - Z(j)),
/// T = |P1 - P2|^2/4, R = |P1 + P2|^2/4, evaluated in pole-free closed forms.
Coefficients coefficients_from_parts(const ReducedParams& rp, Complex G,
                                     const ConductivityResult& sigma,
                                     double theta, Variant variant);

/// Full per-frequency evaluation: derives the bundle, picks the G method
/// (g2 for Omega >= 0.9 where the discrete spectrum dominates, the full
/// series below; override to force one), computes sigma_d, assembles T/R/A.
Coefficients coefficients(const FilmProblem& problem, double Omega, Variant variant,
                          std::optional<GMethod> g_method = std::nullopt,
                          const Tolerance& tol = {});

/// Factored closed forms of the reduced-variant T and R (the kd<<1 pair);
/// algebraically identical to the |P1 -+ P2|^2/4 route, kept as a cross-check.
std::pair<double, double> reduced_factored_TR(const ReducedParams& rp, Complex G,
                                              Complex sigma_scale, double theta);

}  // namespace pfilm
