#pragma once

#include <string>

#include "pfilm/types.hpp"

namespace pfilm {

/// Bulk metal parameters of a degenerate electron plasma.
struct Material {
  double omega_p = 0.0;  // plasma frequency, rad/s
  double v_F = 0.0;      // Fermi velocity, cm/s
  std::string name;

  void validate() const;  // omega_p > 0, 0 < v_F < c_light

  double skin_depth_ir() const { return c_light / omega_p; }       // delta_0 = c/omega_p
  double debye_radius_sq() const { return 3.0 * v_F * v_F / (omega_p * omega_p); }

  static Material sodium();  // omega_p = 6.5e15, v_F = 8.52e7
};

/// Full experiment description: film + incidence + scattering parameters.
struct FilmProblem {
  Material material;
  double d_nm = 0.0;   // film thickness, nm
  double theta = 0.0;  // incidence (pitch) angle, rad; pi/2 exactly is rejected
  double eps = 0.0;    // reduced collision rate nu/omega_p
  double p = 1.0;      // specularity coefficient in [0, 1]

  void validate() const;

  double d_cm() const { return d_nm * 1e-7; }
  double nu() const { return eps * material.omega_p; }
  double mean_free_path() const { return material.v_F / nu(); }  // l = v_F/nu, cm
  double tau() const { return 1.0 / nu(); }
  double sigma0_static() const;  // omega_p^2 tau / (4 pi)
};

/// Dimensionless parameter bundle consumed by every downstream formula.
/// eta1 caches sqrt(ac) (principal branch).
struct ReducedParams {
  double Omega = 0.0;       // omega/omega_p
  double eps = 0.0;         // nu/omega_p
  Complex z0;               // (omega_p d / 2 v_F) (eps - i Omega)
  Complex ac;               // (eps^2 - i eps Omega)/3, = eta1^2
  Complex lambda1;          // c^2 - ac = -(Omega^2 + i eps Omega)/3
  Complex lambda_inf;       // (1/3)(1 - Omega^2 - i eps Omega) = 1/3 + lambda1
  double kd = 0.0;          // Omega omega_p d / c_light
  Complex drude;            // 2 pi sigma0(omega) d / c_light
  Complex eta1;

  Complex c_sq() const { return ac + lambda1; }  // the kinetic parameter c^2
};

/// Derives the dimensionless bundle at one reduced frequency.
/// Rejects Omega <= 0 and non-finite inputs.
ReducedParams reduce(const FilmProblem& problem, double Omega);

/// Reads a plain key-value material file (keys: name, omega_p, v_F).
Material load_material_file(const std::string& path);

/// Resolves a material by preset name ("sodium"), by file path, or by
/// <name>.mat lookup in the directory named by PFILM_MATERIAL_DIR.
Material find_material(const std::string& name_or_path);

}  // namespace pfilm
