#include "pfilm/resonance.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pfilm/dispersion.hpp"

namespace pfilm {

namespace {

constexpr double pi = std::numbers::pi;

// eta0 depends on (Omega, eps) only; thickness/angle enter nowhere in lambda.
Complex eta0_of(double Omega, double eps, const Material& material, const Tolerance& tol) {
  FilmProblem dummy{material, 1.0, 0.0, eps, 1.0};
  return make_dispersion_context(reduce(dummy, Omega), tol).eta0;
}

// kappa = Re[(Omega + i eps)/eta0] * omega_p 1e-7 / (2 v_F): the phase
// condition reads d_nm * kappa = pi/2 + pi n.
double phase_slope(double Omega, double eps, const Material& material,
                   const Tolerance& tol) {
  const Complex e0 = eta0_of(Omega, eps, material, tol);
  return (material.omega_p * 1e-7 / (2.0 * material.v_F)) *
         (Complex(Omega, eps) / e0).real();
}

}  // namespace

ResonanceSet find_resonances(std::span<const double> omega,
                             std::span<const double> value, ResonanceKind kind) {
  if (omega.size() != value.size())
    throw std::invalid_argument("find_resonances: column length mismatch");
  if (omega.size() < 3)
    throw std::invalid_argument("find_resonances: need at least 3 points");

  const double sign = (kind == ResonanceKind::absorb_max) ? -1.0 : 1.0;
  ResonanceSet set;
  set.kind = kind;
  int n = 0;
  for (std::size_t i = 1; i + 1 < omega.size(); ++i) {
    const double y0 = sign * value[i - 1];
    const double y1 = sign * value[i];
    const double y2 = sign * value[i + 1];
    if (y1 < y0 && y1 < y2) {
      const double curv = y0 - 2.0 * y1 + y2;
      double x = omega[i];
      if (curv > 0.0) {
        // parabolic refinement on a locally uniform grid
        const double dx = 0.5 * (y0 - y2) / curv;
        x += dx * (omega[i + 1] - omega[i]);
      }
      set.entries.push_back({n++, x, curv});
    }
  }
  if (set.entries.empty())
    throw ResonanceError("find_resonances: no interior extremum found");
  return set;
}

void index_by_phase(ResonanceSet& set, const Material& material, double eps,
                    double d_nm, const Tolerance& tol) {
  for (auto& r : set.entries) {
    const double phase = d_nm * phase_slope(r.omega, eps, material, tol);
    r.n = int(std::lround((phase - pi / 2.0) / pi));
  }
}

double thickness_from_resonance(double omega_n, int n, const Material& material,
                                double eps, const Tolerance& tol) {
  if (n < 0) throw std::invalid_argument("thickness_from_resonance: n must be >= 0");
  material.validate();

  const Complex e0 = eta0_of(omega_n, eps, material, tol);
  const double denom = (Complex(omega_n, eps) / e0).real();
  if (!(denom > 0.0))
    throw ResonanceError("thickness_from_resonance: nonpositive Re[(Omega + i eps)/eta0]");
  const double d_nm =
      1e7 * pi * material.v_F * double(1 + 2 * n) / (material.omega_p * denom);

  // phase-condition round trip: Re(i z0(d)/eta0) must equal pi/2 + pi n
  const Complex z0 = (material.omega_p * d_nm * 1e-7 / (2.0 * material.v_F)) *
                     Complex(eps, -omega_n);
  const double phase = (Complex(0.0, 1.0) * z0 / e0).real();
  if (std::abs(phase - (pi / 2.0 + pi * n)) > 1e-6)
    throw ResonanceError("thickness_from_resonance: phase-condition self-check failed");
  return d_nm;
}

ThicknessFit fit_thickness(const ResonanceSet& set, const Material& material,
                           double eps, int max_offset, const Tolerance& tol) {
  if (set.entries.empty())
    throw ResonanceError("fit_thickness: empty resonance set");
  material.validate();

  const std::size_t m = set.entries.size();
  std::vector<double> kappa(m);
  for (std::size_t j = 0; j < m; ++j)
    kappa[j] = phase_slope(set.entries[j].omega, eps, material, tol);

  ThicknessFit fit;
  double best_ss = std::numeric_limits<double>::max();
  for (int n0 = 0; n0 <= max_offset; ++n0) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double target = pi / 2.0 + pi * double(n0 + int(j));
      num += kappa[j] * target;
      den += kappa[j] * kappa[j];
    }
    const double d = num / den;
    double ss = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double r = d * kappa[j] - (pi / 2.0 + pi * double(n0 + int(j)));
      ss += r * r;
    }
    if (ss < best_ss) {
      best_ss = ss;
      fit.n_offset = n0;
      fit.d_lsq = d;
    }
  }

  fit.d_each.resize(m);
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    fit.d_each[j] = (pi / 2.0 + pi * double(fit.n_offset + int(j))) / kappa[j];
    sum += fit.d_each[j];
  }
  fit.mean = sum / double(m);
  double var = 0.0;
  for (double d : fit.d_each) var += (d - fit.mean) * (d - fit.mean);
  fit.spread = std::sqrt(var / double(m));
  return fit;
}

}  // namespace pfilm
