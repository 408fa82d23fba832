#include "pfilm/conductivity.hpp"

#include <cmath>

namespace pfilm {

Complex phi_fuchs(Complex w, double p, const Tolerance& tol) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::invalid_argument("phi_fuchs: p must lie in [0, 1]");
  if (!(w.real() > 0.0))
    throw std::invalid_argument("phi_fuchs: requires Re(w) > 0");
  if (p == 1.0) return w;  // (1-p) kills the integral term

  const auto integrand = [w, p](double t) {
    const double t2 = t * t;
    const Complex e = std::exp(-w * t);
    return (1.0 / (t2 * t) - 1.0 / (t2 * t2 * t)) * (1.0 - e) / (1.0 - p * e);
  };
  const IntegralResult I = integrate_semi_infinite(integrand, 1.0, tol);
  const Complex inv_phi = 1.0 / w - 1.5 * (1.0 - p) / (w * w) * I.value;
  return 1.0 / inv_phi;
}

ConductivityResult sigma_d(const FilmProblem& problem, double Omega, const Tolerance& tol) {
  problem.validate();
  if (!(Omega >= 0.0) || !std::isfinite(Omega))
    throw std::invalid_argument("sigma_d: Omega must be >= 0");

  // w = (d/v_F)(nu - i omega), i.e. 2 z0; real d/l in the static case
  const Complex w = (problem.material.omega_p * problem.d_cm() / problem.material.v_F) *
                    Complex(problem.eps, -Omega);
  ConductivityResult out;
  out.w = w;
  out.p = problem.p;
  out.sigma_d_over_sigma0 = (problem.p == 1.0) ? Complex(1.0) : w / phi_fuchs(w, problem.p, tol);
  out.passive = std::abs(out.sigma_d_over_sigma0) <= 1.0 + 1e-9;
  return out;
}

}  // namespace pfilm
