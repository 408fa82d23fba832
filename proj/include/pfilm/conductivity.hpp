#pragma once

#include "pfilm/material.hpp"
#include "pfilm/numerics.hpp"

namespace pfilm {

struct ConductivityResult {
  Complex sigma_d_over_sigma0;  // sigma_d / sigma0(omega) = w/Phi(w)
  Complex w;                    // complex size parameter d/l with l -> v_F tau/(1 - i omega tau)
  double p = 1.0;
  bool passive = true;          // |ratio| <= 1 + small; monitored, never enforced
};

/// Default tolerance for the Fuchs integral: the integrand oscillates like
/// exp(-i Im(w) t), so the budget is generous.
inline Tolerance conductivity_tolerance() { return Tolerance{1e-9, 1e-12, 2000000}; }

/// Fuchs size-effect function Phi(w) for specularity p in [0, 1]:
///   1/Phi = 1/w - (3/(2 w^2))(1-p) Int_1^inf (1/t^3 - 1/t^5)(1 - e^{-wt})/(1 - p e^{-wt}) dt.
/// Requires Re(w) > 0. p = 1 short-circuits to Phi = w.
Complex phi_fuchs(Complex w, double p, const Tolerance& tol = conductivity_tolerance());

/// Thickness-averaged conductivity ratio at reduced frequency Omega >= 0.
/// w = (d/v_F)(nu - i omega) = 2 z0; the optics-facing dimensionless input is
/// reduce(...).drude * sigma_d_over_sigma0.
ConductivityResult sigma_d(const FilmProblem& problem, double Omega,
                           const Tolerance& tol = conductivity_tolerance());

}  // namespace pfilm
