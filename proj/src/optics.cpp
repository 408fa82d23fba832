#include "pfilm/optics.hpp"

#include <cmath>
#include <limits>

#include "pfilm/dispersion.hpp"

namespace pfilm {

const char* to_string(Variant v) {
  return v == Variant::full ? "full" : "reduced";
}

Impedances impedances(const ReducedParams& rp, Complex G,
                      const ConductivityResult& sigma, double theta, Variant variant) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const Complex S = rp.drude * sigma.sigma_d_over_sigma0;
  const Complex i_kd(0.0, rp.kd);
  Impedances z;
  if (variant == Variant::full) {
    z.Z1 = 0.5 * i_kd * (1.0 - G * s2);
    const Complex den = i_kd - 2.0 * S;
    if (den == Complex(0.0))
      throw OpticsError("impedances: i kd - 4 pi sigma_d d/c vanished (Omega = " +
                        std::to_string(rp.Omega) + ")");
    z.Z2 = 2.0 / den;
  } else {
    z.Z1 = -0.5 * i_kd * G * s2;
    z.Z2 = (S == Complex(0.0))
               ? Complex(std::numeric_limits<double>::infinity(), 0.0)
               : -1.0 / S;
  }
  return z;
}

Coefficients coefficients_from_parts(const ReducedParams& rp, Complex G,
                                     const ConductivityResult& sigma,
                                     double theta, Variant variant) {
  const double ct = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const Complex S = rp.drude * sigma.sigma_d_over_sigma0;
  const Complex i_kd(0.0, rp.kd);

  // P(j) in forms whose denominators vanish only at genuine poles; "vanish"
  // is judged against the scale of the cancelling terms
  const auto check_pole = [&rp](Complex den, double scale) {
    if (std::abs(den) < 1e-14 * scale)
      throw OpticsError("coefficients: cos(theta) = Z pole at Omega = " +
                        std::to_string(rp.Omega));
  };
  Complex P1, P2;
  if (variant == Variant::full) {
    const Complex q = i_kd * (1.0 - G * s2);
    const Complex den1 = 2.0 * ct - q;
    const Complex den2 = (2.0 * S - i_kd) * ct + 2.0;
    check_pole(den1, 2.0 * ct + std::abs(q));
    check_pole(den2, std::abs((2.0 * S - i_kd) * ct) + 2.0);
    P1 = (2.0 * ct + q) / den1;
    P2 = ((2.0 * S - i_kd) * ct - 2.0) / den2;
  } else {
    const Complex q = i_kd * G * s2;
    const Complex den1 = 2.0 * ct + q;
    const Complex den2 = S * ct + 1.0;
    check_pole(den1, 2.0 * ct + std::abs(q));
    check_pole(den2, std::abs(S * ct) + 1.0);
    P1 = (2.0 * ct - q) / den1;
    P2 = (S * ct - 1.0) / den2;
  }

  Coefficients c;
  c.T = 0.25 * std::norm(P1 - P2);
  c.R = 0.25 * std::norm(P1 + P2);
  c.A = 1.0 - c.T - c.R;
  c.variant = variant;
  c.G = G;
  c.sigma_scale = S;
  const Impedances z = impedances(rp, G, sigma, theta, variant);
  c.Z1 = z.Z1;
  c.Z2 = z.Z2;
  c.P1 = P1;
  c.P2 = P2;
  c.passive = c.T >= 0.0 && c.T <= 1.0 + 1e-12 && c.R >= 0.0 &&
              c.R <= 1.0 + 1e-12 && c.A >= -1e-9;
  return c;
}

Coefficients coefficients(const FilmProblem& problem, double Omega, Variant variant,
                          std::optional<GMethod> g_method, const Tolerance& tol) {
  const ReducedParams rp = reduce(problem, Omega);
  const GMethod method =
      g_method.value_or(Omega >= 0.9 ? GMethod::g2 : GMethod::series);

  GResult g;
  switch (method) {
    case GMethod::series: g = g_series(rp, tol); break;
    case GMethod::g1: g = g1(rp); break;
    case GMethod::g2: g = g2(make_dispersion_context(rp, tol)); break;
    case GMethod::quadrature:
      g = g_quadrature(make_dispersion_context(rp, tol));
      break;
  }
  const ConductivityResult sig = sigma_d(problem, Omega);
  return coefficients_from_parts(rp, g.value, sig, problem.theta, variant);
}

std::pair<double, double> reduced_factored_TR(const ReducedParams& rp, Complex G,
                                              Complex sigma_scale, double theta) {
  const double ct = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const Complex Q = Complex(0.0, 0.5 * rp.kd) * G * s2;  // i k (d/2) G sin^2
  const Complex S = sigma_scale;
  const Complex den = (ct + Q) * (1.0 + S * ct);
  const double T = ct * ct * std::norm((1.0 - Q * S) / den);
  const double R = std::norm((Q - S * ct * ct) / den);
  return {T, R};
}

}  // namespace pfilm
