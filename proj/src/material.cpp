#include "pfilm/material.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include "pfilm/csvio.hpp"

namespace pfilm {

void Material::validate() const {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p))
    throw std::invalid_argument("Material: omega_p must be positive and finite");
  if (!(v_F > 0.0) || !(v_F < c_light))
    throw std::invalid_argument("Material: v_F must satisfy 0 < v_F < c_light");
}

Material Material::sodium() { return Material{6.5e15, 8.52e7, "sodium"}; }

void FilmProblem::validate() const {
  material.validate();
  if (!(d_nm > 0.0) || !std::isfinite(d_nm))
    throw std::invalid_argument("FilmProblem: thickness must be positive");
  if (!(theta >= 0.0) || !(theta < std::numbers::pi / 2))
    throw std::invalid_argument(
        "FilmProblem: theta must lie in [0, pi/2); the grazing limit is not an "
        "evaluation point");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("FilmProblem: eps must be positive");
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::invalid_argument("FilmProblem: specularity p must lie in [0, 1]");
}

double FilmProblem::sigma0_static() const {
  return material.omega_p * material.omega_p * tau() / (4.0 * std::numbers::pi);
}

ReducedParams reduce(const FilmProblem& problem, double Omega) {
  problem.validate();
  if (!(Omega > 0.0) || !std::isfinite(Omega))
    throw std::invalid_argument("reduce: Omega must be positive and finite");

  const double eps = problem.eps;
  const Complex eo(eps, -Omega);  // eps - i Omega

  ReducedParams rp;
  rp.Omega = Omega;
  rp.eps = eps;
  // a0 = d/2: z0 = a0 (nu - i omega)/v_F
  rp.z0 = (problem.material.omega_p * problem.d_cm() / (2.0 * problem.material.v_F)) * eo;
  rp.ac = eps * eo / 3.0;
  rp.lambda1 = -(Omega * Omega + Complex(0.0, eps * Omega)) / 3.0;
  rp.lambda_inf = 1.0 / 3.0 + rp.lambda1;
  rp.kd = Omega * problem.material.omega_p * problem.d_cm() / c_light;
  rp.drude = (problem.material.omega_p * problem.d_cm() / (2.0 * c_light)) / eo;
  rp.eta1 = std::sqrt(rp.ac);
  return rp;
}

Material load_material_file(const std::string& path) {
  auto kv = read_key_value_file(path);
  Material m;
  if (auto it = kv.find("name"); it != kv.end()) m.name = it->second;
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("material file " + path + ": missing key '" +
                                  key + "'");
    return std::stod(it->second);
  };
  m.omega_p = need("omega_p");
  m.v_F = need("v_F");
  m.validate();
  if (m.name.empty()) m.name = std::filesystem::path(path).stem().string();
  return m;
}

Material find_material(const std::string& name_or_path) {
  if (name_or_path == "sodium" || name_or_path == "Na") return Material::sodium();
  namespace fs = std::filesystem;
  if (fs::exists(name_or_path)) return load_material_file(name_or_path);
  if (const char* dir = std::getenv("PFILM_MATERIAL_DIR")) {
    const fs::path candidate = fs::path(dir) / (name_or_path + ".mat");
    if (fs::exists(candidate)) return load_material_file(candidate.string());
  }
  throw std::invalid_argument("unknown material '" + name_or_path +
                              "' (not a preset, not a file, not found in "
                              "PFILM_MATERIAL_DIR)");
}

}  // namespace pfilm
