#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "pfilm/csvio.hpp"
#include "pfilm/dispersion.hpp"
#include "pfilm/resonance.hpp"
#include "pfilm/sweep.hpp"

namespace {

using namespace pfilm;

constexpr double deg = std::numbers::pi / 180.0;

struct CommonOpts {
  std::string material = "sodium";
  double d_nm = 10.0;
  double theta_deg = 75.0;
  double eps = 1e-3;
  double p = 1.0;
  std::string variant = "reduced";
  std::string g_method = "auto";
  std::string out;
  std::string config;
};

void parse_into(std::string& v, const std::string& s) { v = s; }
void parse_into(double& v, const std::string& s) { v = std::stod(s); }
void parse_into(long& v, const std::string& s) { v = std::stol(s); }
void parse_into(int& v, const std::string& s) { v = std::stoi(s); }

/// Lets a flat key-value config file fill in any flag the command line did
/// not set; command-line flags always win.
struct OptionSet {
  CLI::App* cmd = nullptr;
  std::map<std::string, CLI::Option*> options;
  std::map<std::string, std::function<void(const std::string&)>> setters;

  template <typename T>
  CLI::Option* add(const std::string& name, T& var, const std::string& help) {
    CLI::Option* o = cmd->add_option("--" + name, var, help);
    options[name] = o;
    setters[name] = [&var](const std::string& s) { parse_into(var, s); };
    return o;
  }

  void apply_config(const std::string& path) const {
    for (const auto& [key, value] : read_key_value_file(path)) {
      auto it = setters.find(key);
      if (it == setters.end())
        throw std::invalid_argument("config key '" + key +
                                    "' is not an option of this command");
      if (options.at(key)->count() == 0) it->second(value);
    }
  }
};

OptionSet add_common(CLI::App* cmd, CommonOpts& c) {
  OptionSet set;
  set.cmd = cmd;
  set.add("material", c.material, "material preset name or file path");
  set.add("d-nm", c.d_nm, "film thickness, nm");
  set.add("theta-deg", c.theta_deg, "incidence angle, degrees");
  set.add("eps", c.eps, "reduced collision rate nu/omega_p");
  set.add("p", c.p, "specularity coefficient in [0,1]");
  set.add("variant", c.variant, "impedance variant: reduced | full")
      ->check(CLI::IsMember({"reduced", "full"}));
  set.add("g-method", c.g_method,
          "field-average method: auto | g2 | series | quadrature | g1")
      ->check(CLI::IsMember({"auto", "g2", "series", "quadrature", "g1"}));
  set.add("out", c.out, "output path (default: stdout)");
  set.add("config", c.config, "flat key-value config file");
  return set;
}

FilmProblem make_problem(const CommonOpts& c) {
  FilmProblem p;
  p.material = find_material(c.material);
  p.d_nm = c.d_nm;
  p.theta = c.theta_deg * deg;
  p.eps = c.eps;
  p.p = c.p;
  p.validate();
  return p;
}

SweepOptions make_sweep_options(const CommonOpts& c) {
  SweepOptions o;
  o.variant = (c.variant == "full") ? Variant::full : Variant::reduced;
  if (c.g_method == "g2") o.g_method = GMethod::g2;
  else if (c.g_method == "series") o.g_method = GMethod::series;
  else if (c.g_method == "quadrature") o.g_method = GMethod::quadrature;
  else if (c.g_method == "g1") o.g_method = GMethod::g1;
  return o;
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range '" + s + "' must look like START:STOP");
  return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

void deliver(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << payload;
}

int run_sweep_command(const CommonOpts& c, SweepAxis axis, const std::string& range,
                      long steps, double omega_fixed) {
  SweepSpec spec;
  spec.axis = axis;
  std::tie(spec.start, spec.stop) = parse_range(range);
  spec.steps = steps;
  spec.base = make_problem(c);
  spec.omega_fixed = omega_fixed;
  spec.options = make_sweep_options(c);
  spec.validate();

  const std::vector<SpectrumRow> rows = run_sweep(spec);
  long failed = 0;
  double max_kl = 0.0;
  for (const auto& r : rows) {
    if (!r.error.empty()) ++failed;
    if (std::isfinite(r.kl)) max_kl = std::max(max_kl, r.kl);
  }
  std::ostringstream os;
  write_spectrum_csv(os, spec, rows);
  deliver(c.out, os.str());
  if (max_kl > 0.3)
    std::cerr << "warning: k*l reaches " << max_kl
              << "; the kl << 1 validity condition is not met\n";
  if (failed > 0)
    std::cerr << "warning: " << failed << " of " << rows.size()
              << " points carry an error column\n";
  return 0;
}

int run_field(const CommonOpts& c, double omega, long n_points) {
  const FilmProblem problem = make_problem(c);
  const ReducedParams rp = reduce(problem, omega);
  if (n_points < 2) throw std::invalid_argument("--n-points must be >= 2");

  std::vector<FieldRow> rows(n_points);
  for (long i = 0; i < n_points; ++i) {
    const double x = double(i) / double(n_points - 1);
    rows[i] = {x, field_profile(x, rp)};
  }
  const IntegralResult mean =
      integrate_finite([&rp](double x) { return field_profile(x, rp); }, 0.0, 1.0,
                       Tolerance{1e-8, 1e-10, 200000});
  const GResult g = g_series(rp);

  std::ostringstream os;
  write_field_csv(os, problem, omega, rows, mean.value, g.value);
  deliver(c.out, os.str());
  return 0;
}

int run_invert(const CommonOpts& c, const std::string& in_path,
               const std::string& column, int max_offset) {
  if (in_path.empty()) throw std::invalid_argument("invert: --in is required");
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open spectrum file: " + in_path);
  const SpectrumTable table = read_spectrum_csv(in);
  const std::vector<double>& omega = table.column("omega");
  const std::vector<double>& value = table.column(column);
  if (omega.empty()) throw ResonanceError("spectrum file has no data rows");

  const ResonanceKind kind = column == "T"   ? ResonanceKind::transmit_min
                             : column == "A" ? ResonanceKind::absorb_max
                                             : ResonanceKind::reflect_min;
  const Material material = find_material(c.material);
  ResonanceSet set = find_resonances(omega, value, kind);
  const ThicknessFit fit = fit_thickness(set, material, c.eps, max_offset);

  std::ostringstream os;
  os << "# thickness inversion from " << in_path << " (" << column << " extrema)\n";
  os << "n,omega_n,d_nm\n";
  for (std::size_t j = 0; j < set.entries.size(); ++j)
    os << (fit.n_offset + int(j)) << ',' << format_double(set.entries[j].omega)
       << ',' << format_double(fit.d_each[j]) << '\n';
  os << "# least-squares d = " << format_double(fit.d_lsq) << " nm\n";
  os << "# mean d = " << format_double(fit.mean) << " nm +- "
     << format_double(fit.spread) << " nm\n";
  deliver(c.out, os.str());
  return 0;
}

int run_modes(const CommonOpts& c, double omega) {
  const FilmProblem problem = make_problem(c);
  const ReducedParams rp = reduce(problem, omega);

  std::ostringstream os;
  os << "pfilm " << version << " modes at Omega = " << omega << "\n";
  os << "  z0        = " << rp.z0 << "\n";
  os << "  kd        = " << rp.kd << "\n";
  const double kl = rp.kd * problem.mean_free_path() / problem.d_cm();
  os << "  k*l       = " << kl << (kl > 0.3 ? "   [warning: kl << 1 not met]" : "")
     << "\n";

  const GResult gs = g_series(rp);
  const GResult gfirst = g1(rp);
  os << "  G(series)     = " << gs.value << "   (" << gs.terms_or_evals << " terms)\n";
  os << "  G1            = " << gfirst.value
     << "   O1 = " << relative_error_percent(gs, gfirst) << " %\n";
  try {
    const DispersionContext ctx = make_dispersion_context(rp);
    os << "  eta0 seed     = " << ctx.eta0_seed << "   (winding " << ctx.winding
       << ")\n";
    os << "  eta0 polished = " << ctx.eta0
       << "   |lambda(eta0)| = " << ctx.eta0_residual << "\n";
    const GResult gq = g_quadrature(ctx);
    const GResult gtwo = g2(ctx);
    os << "  G(quadrature) = " << gq.value << "   (" << gq.terms_or_evals
       << " evals, est err " << gq.error_estimate << ")\n";
    os << "  G2            = " << gtwo.value
       << "   O2 = " << relative_error_percent(gs, gtwo) << " %\n";
  } catch (const NumericsError& e) {
    os << "  eta0: " << e.what() << "\n";
  }
  const ConductivityResult sig = sigma_d(problem, omega);
  os << "  sigma_d/sigma0(omega) = " << sig.sigma_d_over_sigma0
     << (sig.passive ? "" : "   [passivity monitor]") << "\n";
  deliver(c.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-wave optics of thin metal films near the plasma resonance"};
  app.require_subcommand(1);

  CommonOpts c;
  std::string omega_range = "0.8:1.6";
  std::string theta_range = "1:89";
  std::string d_range = "1:100";
  long steps = 801;
  double omega = 1.0;
  long n_points = 201;
  std::string in_path, column = "R";
  int max_offset = 40;

  auto* sc_spectrum = app.add_subcommand("spectrum", "T/R/A versus reduced frequency");
  OptionSet os1 = add_common(sc_spectrum, c);
  os1.add("omega-range", omega_range, "START:STOP in Omega = omega/omega_p");
  os1.add("steps", steps, "grid points (inclusive)");

  auto* sc_angle = app.add_subcommand("angle-sweep", "T/R/A versus incidence angle");
  OptionSet os2 = add_common(sc_angle, c);
  os2.add("theta-range", theta_range, "START:STOP in degrees");
  os2.add("steps", steps, "grid points");
  os2.add("omega", omega, "fixed reduced frequency");

  auto* sc_thick = app.add_subcommand("thickness-sweep", "T/R/A versus thickness");
  OptionSet os3 = add_common(sc_thick, c);
  os3.add("d-range", d_range, "START:STOP in nm");
  os3.add("steps", steps, "grid points");
  os3.add("omega", omega, "fixed reduced frequency");

  auto* sc_field = app.add_subcommand("field", "in-film electric field profile e(x)");
  OptionSet os4 = add_common(sc_field, c);
  os4.add("omega", omega, "reduced frequency");
  os4.add("n-points", n_points, "profile sample count");

  auto* sc_invert = app.add_subcommand("invert", "film thickness from resonance positions");
  OptionSet os5 = add_common(sc_invert, c);
  os5.add("in", in_path, "spectrum CSV (needs omega + coefficient column)");
  os5.add("column", column, "coefficient column to use: R | T | A")
      ->check(CLI::IsMember({"R", "T", "A"}));
  os5.add("max-offset", max_offset, "largest candidate index of the first resonance");

  auto* sc_modes = app.add_subcommand("modes", "eta0, G variants and O1/O2 at one point");
  OptionSet os6 = add_common(sc_modes, c);
  os6.add("omega", omega, "reduced frequency");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const OptionSet* parsed : {&os1, &os2, &os3, &os4, &os5, &os6})
      if (parsed->cmd->parsed() && !c.config.empty()) parsed->apply_config(c.config);

    if (sc_spectrum->parsed())
      return run_sweep_command(c, SweepAxis::omega, omega_range, steps, omega);
    if (sc_angle->parsed())
      return run_sweep_command(c, SweepAxis::theta_deg, theta_range, steps, omega);
    if (sc_thick->parsed())
      return run_sweep_command(c, SweepAxis::thickness_nm, d_range, steps, omega);
    if (sc_field->parsed()) return run_field(c, omega, n_points);
    if (sc_invert->parsed()) return run_invert(c, in_path, column, max_offset);
    if (sc_modes->parsed()) return run_modes(c, omega);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
