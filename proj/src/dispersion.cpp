#include "pfilm/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pfilm {

namespace {

constexpr double pi = std::numbers::pi;

// Threshold where the closed form 1 + (z/2)Ln((z-1)/(z+1)) loses digits to
// cancellation and the inverse-power series takes over.
constexpr double series_radius = 4.0;

Complex lambda0_series(Complex z) {
  // lambda0 = -sum_{m>=1} z^{-2m}/(2m+1), |z| > 1
  const Complex w = 1.0 / (z * z);
  Complex acc = 0.0;
  Complex t = w;
  for (int m = 1; m <= 30; ++m) {
    acc += t / double(2 * m + 1);
    t *= w;
  }
  return -acc;
}

Complex lambda0_prime_series(Complex z) {
  // lambda0' = sum_{m>=1} (2m/(2m+1)) z^{-(2m+1)}
  const Complex w = 1.0 / (z * z);
  Complex acc = 0.0;
  Complex t = w / z;
  for (int m = 1; m <= 30; ++m) {
    acc += (2.0 * m / (2.0 * m + 1.0)) * t;
    t *= w;
  }
  return acc;
}

}  // namespace

Complex lambda0(Complex z) {
  if (z == Complex(1.0, 0.0) || z == Complex(-1.0, 0.0))
    throw std::domain_error("lambda0: evaluation at the cut endpoints +-1");
  if (std::abs(z) >= series_radius) return lambda0_series(z);
  if (z.imag() == 0.0 && std::abs(z.real()) < 1.0) {
    const double tau = z.real();
    return Complex(1.0 + 0.5 * tau * std::log((1.0 - tau) / (1.0 + tau)), 0.0);
  }
  return 1.0 + 0.5 * z * std::log((z - 1.0) / (z + 1.0));
}

Complex lambda0_prime(Complex z) {
  if (z == Complex(1.0, 0.0) || z == Complex(-1.0, 0.0))
    throw std::domain_error("lambda0_prime: evaluation at the cut endpoints +-1");
  if (std::abs(z) >= series_radius) return lambda0_prime_series(z);
  if (z.imag() == 0.0 && std::abs(z.real()) < 1.0) {
    const double tau = z.real();
    return Complex(0.5 * std::log((1.0 - tau) / (1.0 + tau)) + tau / (tau * tau - 1.0),
                   0.0);
  }
  return 0.5 * std::log((z - 1.0) / (z + 1.0)) + z / (z * z - 1.0);
}

Complex lambda_value(Complex z, const ReducedParams& rp) {
  return rp.lambda1 - (z * z - rp.ac) * lambda0(z);
}

Complex lambda_prime(Complex z, const ReducedParams& rp) {
  return -2.0 * z * lambda0(z) - (z * z - rp.ac) * lambda0_prime(z);
}

std::pair<Complex, Complex> lambda_pm(double tau, const ReducedParams& rp) {
  if (!(tau > 0.0) || !(tau < 1.0))
    throw std::domain_error("lambda_pm: tau must lie in (0, 1)");
  const Complex l0 = lambda0(Complex(tau, 0.0));
  const Complex q = Complex(tau * tau, 0.0) - rp.ac;
  const Complex half_jump(0.0, 0.5 * pi * tau);
  return {rp.lambda1 - q * (l0 + half_jump), rp.lambda1 - q * (l0 - half_jump)};
}

Complex eta_star(long k, const ReducedParams& rp) {
  if (k < 0) throw std::invalid_argument("eta_star: k must be >= 0");
  return Complex(0.0, -2.0) * rp.z0 / (pi * double(2 * k + 1));
}

GlTable::GlTable(const ReducedParams& rp, std::size_t base_points) : rp_(rp) {
  if (base_points < 64) throw std::invalid_argument("GlTable: grid too small");

  // 3/4 uniform on (0, 0.9], 1/4 geometric into the logarithmic endpoint.
  const std::size_t n_uni = 3 * base_points / 4;
  const std::size_t n_geo = base_points - n_uni;
  tau_.reserve(base_points);
  for (std::size_t i = 0; i < n_uni; ++i)
    tau_.push_back(1e-9 + (0.9 - 1e-9) * double(i) / double(n_uni - 1));
  for (std::size_t j = 1; j <= n_geo; ++j)
    tau_.push_back(1.0 - 0.1 * std::pow(1e-13 / 0.1, double(j) / double(n_geo)));

  ratio_.resize(tau_.size());
  phase_.resize(tau_.size());
  double min_abs = std::numeric_limits<double>::max();
  double phase = 0.0;
  Complex prev(1.0, 0.0);
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    const auto [lp, lm] = lambda_pm(tau_[i], rp_);
    min_abs = std::min({min_abs, std::abs(lp), std::abs(lm)});
    const Complex r = lp / lm;
    if (i == 0)
      phase = std::arg(r);
    else {
      const double dphi = std::arg(r / prev);
      if (std::abs(dphi) >= pi * (1.0 - 1e-12))
        throw BranchError("GlTable: phase step >= pi near tau = " +
                          std::to_string(tau_[i]));
      phase += dphi;
    }
    ratio_[i] = r;
    phase_[i] = phase;
    prev = r;
  }
  if (min_abs < 1e-12)
    throw BranchError(
        "GlTable: lambda+- vanishes on (0,1); factorization form invalid at "
        "Omega = " + std::to_string(rp_.Omega) + ", eps = " + std::to_string(rp_.eps));
}

Complex GlTable::operator()(double tau) const {
  if (!(tau > 0.0) || !(tau < 1.0))
    throw std::domain_error("GlTable: tau must lie in (0, 1)");
  const auto [lp, lm] = lambda_pm(tau, rp_);
  const Complex r = lp / lm;
  // branch offset from the nearest node at or below tau
  auto it = std::upper_bound(tau_.begin(), tau_.end(), tau);
  const std::size_t i = (it == tau_.begin()) ? 0 : std::size_t(it - tau_.begin()) - 1;
  const double phase = phase_[i] + std::arg(r / ratio_[i]);
  return Complex(std::log(std::abs(r)), phase);
}

DispersionContext make_dispersion_context(const ReducedParams& rp, const Tolerance& tol) {
  tol.validate();
  GlTable gl(rp);

  const double wind = gl.winding();
  const long pairs = std::lround(wind);
  if (pairs == 0)
    throw NoDiscreteZero("no discrete zero of lambda at Omega = " +
                             std::to_string(rp.Omega) + ", eps = " +
                             std::to_string(rp.eps) + " (winding " +
                             std::to_string(wind) + ")",
                         wind);
  if (std::labs(pairs) > 1)
    throw NoDiscreteZero("unexpected winding " + std::to_string(wind) +
                             " (more than one zero pair?)",
                         wind);

  // eta0^2 = -1 + (2 lambda(i)/lambda_inf) exp[(i/pi) Int_0^1 tau G_l/(tau^2+1) dtau]
  const auto integrand = [&gl](double t) { return t * gl(t) / (t * t + 1.0); };
  const IntegralResult J = integrate_finite(integrand, 0.0, 1.0, tol);
  const Complex lam_i = lambda_value(Complex(0.0, 1.0), rp);
  const Complex eta0_sq =
      -1.0 + (2.0 * lam_i / rp.lambda_inf) *
                 std::exp(Complex(0.0, 1.0 / pi) * J.value);
  Complex seed = std::sqrt(eta0_sq);
  if (seed.real() < 0.0) seed = -seed;

  RootResult polished;
  try {
    polished = newton_polish([&rp](Complex z) { return lambda_value(z, rp); },
                             [&rp](Complex z) { return lambda_prime(z, rp); },
                             seed, tol);
  } catch (const RootError&) {
    std::ostringstream msg;
    msg << "eta0: Newton polish failed from the integral-formula value ("
        << seed.real() << ", " << seed.imag() << ") at Omega = " << rp.Omega
        << ", eps = " << rp.eps;
    throw RootError(msg.str(), seed);
  }
  Complex eta0 = polished.root;
  if (eta0.real() < 0.0) eta0 = -eta0;  // lambda is even; keep the Re >= 0 branch

  return DispersionContext{rp, eta0, polished.residual, seed, wind, std::move(gl)};
}

Complex factorization_X(Complex z, const GlTable& gl, const ReducedParams& rp,
                        const Tolerance& tol) {
  (void)rp;
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 1.0)
    throw std::domain_error("factorization_X: z on the integration segment [0, 1]");
  const auto integrand = [&gl, z](double t) { return gl(t) / (t - z); };
  const IntegralResult v0 = integrate_finite(integrand, 0.0, 1.0, tol);
  const Complex V0 = v0.value / Complex(0.0, 2.0 * pi);
  return std::exp(V0) / (z - 1.0);
}

}  // namespace pfilm
