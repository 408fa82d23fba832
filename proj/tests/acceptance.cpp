// Acceptance suite: runs every numbered numerical contract of the library at
// its pinned tolerance and prints one PASS/FAIL line per criterion. The exit
// code is the number of failed criteria.

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "pfilm/csvio.hpp"
#include "pfilm/dispersion.hpp"
#include "pfilm/resonance.hpp"
#include "pfilm/sweep.hpp"

using namespace pfilm;
using std::numbers::pi;

namespace {

constexpr double deg = pi / 180.0;
int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title,
              detail.c_str());
  if (!ok) ++failures;
}

ReducedParams rp_of(double Omega, double eps, double d_nm) {
  FilmProblem p{Material::sodium(), d_nm, 0.0, eps, 1.0};
  return reduce(p, Omega);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Approximation errors O1/O2 at Omega = 1, eps = 1e-3 for d = 1, 5, 10 nm.
//    O1 within +-0.2 percentage points of {1.42, 1.38, 1.98} %;
//    O2 within 50 % relative of {0.575, 0.003, 0.0004} %.
void criterion_1() {
  const double d_nm[3] = {1.0, 5.0, 10.0};
  const double o1_ref[3] = {1.42, 1.38, 1.98};
  const double o2_ref[3] = {0.575, 0.003, 0.0004};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const ReducedParams rp = rp_of(1.0, 1e-3, d_nm[i]);
    const GResult ref = g_series(rp, Tolerance{1e-10, 1e-14, 2000000});
    const double O1 = relative_error_percent(ref, g1(rp));
    const double O2 =
        relative_error_percent(ref, g2(make_dispersion_context(rp)));
    ok = ok && std::abs(O1 - o1_ref[i]) <= 0.2 &&
         std::abs(O2 - o2_ref[i]) / o2_ref[i] <= 0.5;
    detail += fmt("d=%g: O1=%.4f%% O2=%.5f%%  ", d_nm[i], O1, O2);
  }
  report(1, "approximation errors O1/O2", ok, detail);
}

// ---------------------------------------------------------------------------
// 2. Residue identity: g_quadrature == g_series to 1e-6 relative on the grid
//    Omega x d x eps = {0.8,1.0,1.1,1.3} x {1,5,10} nm x {1e-3, 0.05}.
void criterion_2() {
  bool ok = true;
  double worst = 0.0;
  for (const double Om : {0.8, 1.0, 1.1, 1.3})
    for (const double d : {1.0, 5.0, 10.0})
      for (const double eps : {1e-3, 0.05}) {
        const ReducedParams rp = rp_of(Om, eps, d);
        const GResult q = g_quadrature(make_dispersion_context(rp));
        const GResult s = g_series(rp, Tolerance{1e-10, 1e-14, 2000000});
        const double rel = std::abs(q.value - s.value) / std::abs(s.value);
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-6;
      }
  report(2, "residue identity quadrature == series", ok,
         fmt("24 grid points, worst relative gap %.2e (tolerance 1e-6)", worst));
}

// ---------------------------------------------------------------------------
// 3. Limit cases: forced sigma -> 0, G -> 1 gives T=1, R=0, A=0 to 1e-9;
//    theta = pi/2 - 1e-6 gives T < 1e-6 and R > 1 - 1e-5.
void criterion_3() {
  const ReducedParams rp = rp_of(1.1, 1e-3, 10.0);
  ConductivityResult none;
  none.sigma_d_over_sigma0 = 0.0;
  const Coefficients clear =
      coefficients_from_parts(rp, Complex(1.0), none, 75.0 * deg, Variant::full);

  FilmProblem grazing{Material::sodium(), 10.0, pi / 2.0 - 1e-6, 1e-3, 1.0};
  const Coefficients edge = coefficients(grazing, 1.1, Variant::reduced);

  const bool ok = std::abs(clear.T - 1.0) <= 1e-9 && clear.R <= 1e-9 &&
                  std::abs(clear.A) <= 1e-9 && edge.T < 1e-6 &&
                  edge.R > 1.0 - 1e-5;
  report(3, "non-conducting and grazing limits", ok,
         fmt("T=%.12f R=%.2e A=%.2e; grazing T=%.2e R=%.9f", clear.T, clear.R,
             clear.A, edge.T, edge.R));
}

// ---------------------------------------------------------------------------
// 4. Thickness inversion: Omega_3 = 1.025, n = 3 gives d = 9.968 +- 0.02 nm;
//    the simulated d = 10 nm round trip recovers 10 nm within 0.5 %.
void criterion_4() {
  const double d_point = thickness_from_resonance(1.025, 3, Material::sodium(), 1e-3);

  SweepSpec spec;
  spec.axis = SweepAxis::omega;
  spec.start = 1.0;
  spec.stop = 1.2;
  spec.steps = 2001;  // step 1e-4
  spec.base = FilmProblem{Material::sodium(), 10.0, 75.0 * deg, 1e-3, 1.0};
  const auto rows = run_sweep(spec);
  std::vector<double> om, R;
  for (const auto& r : rows)
    if (r.error.empty()) {
      om.push_back(r.Omega);
      R.push_back(r.R);
    }
  const ResonanceSet set = find_resonances(om, R, ResonanceKind::reflect_min);
  const ThicknessFit fit = fit_thickness(set, Material::sodium(), 1e-3);
  const double rel = std::abs(fit.d_lsq - 10.0) / 10.0;

  const bool ok = std::abs(d_point - 9.968) <= 0.02 && rel <= 0.005;
  report(4, "thickness inversion", ok,
         fmt("d(1.025, n=3) = %.4f nm; round trip d = %.4f nm (%.3f%% off, %zu minima)",
             d_point, fit.d_lsq, rel * 100.0, set.entries.size()));
}

// ---------------------------------------------------------------------------
// 5. Comb alignment: on Omega in [1.0, 1.1] with step 1e-4 (d = 10 nm,
//    eps = 1e-3, theta = 75 deg) the reflectance minima must coincide with the
//    zeros of cos(Re(i z0/eta0)) within one grid step, for at least four
//    consecutive minima.
void criterion_5() {
  SweepSpec spec;
  spec.axis = SweepAxis::omega;
  spec.start = 1.0;
  spec.stop = 1.1;
  spec.steps = 1001;  // step 1e-4
  spec.base = FilmProblem{Material::sodium(), 10.0, 75.0 * deg, 1e-3, 1.0};
  const auto rows = run_sweep(spec);

  std::vector<double> om, R, phase;
  for (const auto& r : rows) {
    if (!r.error.empty()) continue;
    om.push_back(r.Omega);
    R.push_back(r.R);
    const ReducedParams rp = reduce(spec.base, r.Omega);
    phase.push_back((Complex(0.0, 1.0) * rp.z0 / r.eta0).real());
  }
  const ResonanceSet minima = find_resonances(om, R, ResonanceKind::reflect_min);

  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < om.size(); ++i) {
    const double a = std::cos(phase[i]), b = std::cos(phase[i + 1]);
    if (a == 0.0 || a * b < 0.0)
      zeros.push_back(om[i] + (om[i + 1] - om[i]) * a / (a - b));
  }

  const double step = (spec.stop - spec.start) / double(spec.steps - 1);
  int run = 0, best_run = 0;
  double worst = 0.0;
  std::string offsets;
  for (const auto& m : minima.entries) {
    double nearest = 1e300;
    for (const double z : zeros) nearest = std::min(nearest, std::abs(m.omega - z));
    worst = std::max(worst, nearest);
    offsets += fmt("%.1f ", nearest / step);
    run = (nearest <= step) ? run + 1 : 0;
    best_run = std::max(best_run, run);
  }
  const bool ok = best_run >= 4;
  report(5, "comb alignment with the mode-phase zeros", ok,
         fmt("%zu minima vs %zu zeros; offsets in grid steps: %s; longest run "
             "within 1 step = %d (need 4)",
             minima.entries.size(), zeros.size(), offsets.c_str(), best_run));
}

// ---------------------------------------------------------------------------
// 6. Dispersion kernel: lambda0(i) = 1 - pi/4 to 1e-14; |lambda(eta0)| < 1e-10
//    across Omega in [0.9, 1.5] for eps in {1e-3, 1e-2}; the factorization
//    reconstruction of lambda(2i) agrees to 1e-8 relative.
void criterion_6() {
  const double kernel_err = std::abs(lambda0(Complex(0.0, 1.0)) - (1.0 - pi / 4.0));

  double worst_res = 0.0;
  for (const double eps : {1e-3, 1e-2})
    for (double Om = 0.9; Om <= 1.5 + 1e-9; Om += 0.05) {
      const ReducedParams rp = rp_of(Om, eps, 10.0);
      const DispersionContext ctx = make_dispersion_context(rp);
      worst_res = std::max(worst_res, std::abs(lambda_value(ctx.eta0, rp)));
    }

  const ReducedParams rp = rp_of(1.1, 1e-3, 10.0);
  const DispersionContext ctx = make_dispersion_context(rp);
  const Tolerance tol{1e-11, 1e-13, 1000000};
  const Complex z(0.0, 2.0);
  const Complex recon = rp.lambda_inf * (ctx.eta0 * ctx.eta0 - z * z) *
                        factorization_X(z, ctx.gl, rp, tol) *
                        factorization_X(-z, ctx.gl, rp, tol);
  const double fact_rel =
      std::abs(recon - lambda_value(z, rp)) / std::abs(lambda_value(z, rp));

  const bool ok = kernel_err <= 1e-14 && worst_res < 1e-10 && fact_rel <= 1e-8;
  report(6, "dispersion kernel and factorization", ok,
         fmt("|lambda0(i)-(1-pi/4)|=%.1e; worst |lambda(eta0)|=%.1e; "
             "factorization rel=%.2e",
             kernel_err, worst_res, fact_rel));
}

// ---------------------------------------------------------------------------
// 7. Conductivity: Phi(w) = w exactly at p = 1; w/Phi -> 1 within 1 % at
//    |w| = 1e3, p = 0; Simpson brute-force oracle agreement to 1e-8 at
//    w in {0.01, 1, 10} x p in {0, 0.5}.
Complex phi_oracle(Complex w, double p, long n) {
  if (n % 2) ++n;
  const double T = 1.0 + 60.0 / w.real();
  const double h = (T - 1.0) / double(n);
  const auto f = [&](double t) {
    const Complex e = std::exp(-w * t);
    return (1.0 / (t * t * t) - 1.0 / std::pow(t, 5)) * (1.0 - e) / (1.0 - p * e);
  };
  std::complex<long double> acc = f(1.0);
  for (long i = 1; i < n; ++i)
    acc += ((i % 2) ? 4.0L : 2.0L) * std::complex<long double>(f(1.0 + h * double(i)));
  acc += f(T);
  Complex integral = Complex(acc * (long double)(h) / 3.0L);
  integral += 1.0 / (2.0 * T * T) - 1.0 / (4.0 * std::pow(T, 4));
  return 1.0 / (1.0 / w - 1.5 * (1.0 - p) / (w * w) * integral);
}

void criterion_7() {
  const bool exact_specular =
      phi_fuchs(Complex(2.5, -7.0), 1.0) == Complex(2.5, -7.0) &&
      phi_fuchs(Complex(1.0, 0.0), 1.0) == Complex(1.0, 0.0);

  const Complex bulk = Complex(1000.0) / phi_fuchs(Complex(1000.0), 0.0);
  const bool bulk_ok = std::abs(bulk - 1.0) <= 0.01;

  const Tolerance tight{1e-11, 1e-14, 2000000};
  double worst = 0.0;
  for (const double w : {0.01, 1.0, 10.0})
    for (const double p : {0.0, 0.5}) {
      const Complex mine = phi_fuchs(Complex(w), p, tight);
      const Complex oracle = phi_oracle(Complex(w), p, w < 0.1 ? 8000000 : 4000000);
      worst = std::max(worst, std::abs(mine - oracle) / std::abs(oracle));
    }
  const bool ok = exact_specular && bulk_ok && worst <= 1e-8;
  report(7, "size-effect conductivity", ok,
         fmt("specular exact: %s; w/Phi(1000) = %.6f; worst oracle gap %.2e",
             exact_specular ? "yes" : "no", bulk.real(), worst));
}

// ---------------------------------------------------------------------------
// 8. Property suite: A+T+R = 1 to machine precision and 0 <= T,R <= 1 with
//    A >= -1e-9 on 1e4 random valid points; e(x) mirror symmetry; the
//    thickness average of e(x) reproduces G to 1e-8.
void criterion_8() {
  std::mt19937 rng(20250809);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const auto pick = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

  const long n_points = 10000;
  long bad_sum = 0, bad_range = 0, failed_points = 0;
  double worst_sum = 0.0;

  struct Draw {
    double d, th, eps, p, Om;
    bool full;
  };
  std::vector<Draw> draws(n_points);
  for (auto& dr : draws)
    dr = {std::exp(pick(std::log(0.5), std::log(50.0))), pick(0.0, 89.0 * deg),
          std::exp(pick(std::log(1e-3), std::log(0.1))), u01(rng),
          pick(0.05, 2.0), u01(rng) < 0.5};

  const Tolerance sigma_tol{1e-7, 1e-10, 2000000};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : bad_sum, bad_range, failed_points) reduction(max : worst_sum)
#endif
  for (long i = 0; i < n_points; ++i) {
    const Draw& dr = draws[i];
    try {
      const FilmProblem f{Material::sodium(), dr.d, dr.th, dr.eps, dr.p};
      const ReducedParams rp = reduce(f, dr.Om);
      const GResult g = (dr.Om >= 0.9)
                            ? g2(make_dispersion_context(rp))
                            : g_series(rp);
      const ConductivityResult sig = sigma_d(f, dr.Om, sigma_tol);
      const Coefficients c = coefficients_from_parts(
          rp, g.value, sig, dr.th, dr.full ? Variant::full : Variant::reduced);
      const double s = std::abs(c.T + c.R + c.A - 1.0);
      worst_sum = std::max(worst_sum, s);
      if (s > 4e-16) ++bad_sum;
      if (!(c.T >= 0.0 && c.T <= 1.0 && c.R >= 0.0 && c.R <= 1.0 && c.A >= -1e-9))
        ++bad_range;
    } catch (const std::exception&) {
      ++failed_points;
    }
  }

  // e(x) mirror symmetry on a random subsample
  long bad_mirror = 0;
  for (int i = 0; i < 300; ++i) {
    const ReducedParams rp =
        rp_of(pick(0.3, 1.5), std::exp(pick(std::log(1e-3), std::log(0.05))),
              std::exp(pick(std::log(1.0), std::log(20.0))));
    const double x = u01(rng);
    const Complex a = field_profile(x, rp);
    const Complex b = field_profile(1.0 - x, rp);
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(a))) ++bad_mirror;
  }

  // mean-field identity on a smaller subsample
  long bad_mean = 0;
  double worst_mean = 0.0;
  for (int i = 0; i < 40; ++i) {
    const ReducedParams rp =
        rp_of(pick(0.5, 1.4), std::exp(pick(std::log(1e-3), std::log(0.05))),
              std::exp(pick(std::log(1.0), std::log(15.0))));
    const auto mean = integrate_finite(
        [&rp](double x) { return field_profile(x, rp); }, 0.0, 1.0,
        Tolerance{1e-10, 1e-12, 200000});
    const GResult g = g_series(rp);
    const double rel = std::abs(mean.value - g.value) / std::abs(g.value);
    worst_mean = std::max(worst_mean, rel);
    if (rel > 1e-8) ++bad_mean;
  }

  const bool ok = bad_sum == 0 && bad_range == 0 && failed_points == 0 &&
                  bad_mirror == 0 && bad_mean == 0;
  report(8, "energy bookkeeping and field properties", ok,
         fmt("%ld points: worst |T+R+A-1| = %.1e, range violations %ld, "
             "failed %ld; mirror violations %ld/300; worst mean-field gap %.1e",
             n_points, worst_sum, bad_range, failed_points, bad_mirror,
             worst_mean));
}

}  // namespace

int main() {
  std::printf("pfilm %s acceptance suite\n", version);
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
