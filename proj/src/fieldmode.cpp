#include "pfilm/fieldmode.hpp"

#include <cmath>
#include <numbers>

namespace pfilm {

namespace {

constexpr double pi = std::numbers::pi;

// tanh saturates to sign(Re u) once |Re u| is large; avoids cosh overflow.
Complex tanh_stable(Complex u) {
  if (u.real() > 25.0) return Complex(1.0, 0.0);
  if (u.real() < -25.0) return Complex(-1.0, 0.0);
  return std::tanh(u);
}

// cosh(a)/cosh(b) with |Re a| <= |Re b| allowed to be huge: pulled into
// exp(sa*a - sb*b) whose real part is |Re a| - |Re b| <= 0.
Complex cosh_ratio(Complex a, Complex b) {
  const double sa = (a.real() >= 0.0) ? 1.0 : -1.0;
  const double sb = (b.real() >= 0.0) ? 1.0 : -1.0;
  return std::exp(sa * a - sb * b) * (1.0 + std::exp(-2.0 * sa * a)) /
         (1.0 + std::exp(-2.0 * sb * b));
}

}  // namespace

const char* to_string(GMethod m) {
  switch (m) {
    case GMethod::quadrature: return "quadrature";
    case GMethod::series: return "series";
    case GMethod::g1: return "g1";
    case GMethod::g2: return "g2";
  }
  return "?";
}

Complex field_profile(double x_over_d, const ReducedParams& rp, const Tolerance& tol) {
  if (!(x_over_d >= 0.0) || !(x_over_d <= 1.0))
    throw std::invalid_argument("field_profile: x/d must lie in [0, 1]");
  if (rp.ac == Complex(0.0))
    throw std::invalid_argument("field_profile: eta1^2 = ac vanishes");

  const double u = 2.0 * x_over_d - 1.0;  // (2x - d)/d in [-1, 1]
  const Complex lead = cosh_ratio(rp.z0 * u / rp.eta1, rp.z0 / rp.eta1);
  const Complex c2 = rp.c_sq();

  // The raw pole-ladder series converges only conditionally (Fourier-like
  // 1/k tail). Splitting 1/lambda = 1/c^2 + (c^2 - lambda)/(c^2 lambda)
  // resums the constant-lambda part in closed form -- it is the same
  // cosh-ratio profile again, by the full-residue identity
  //   sum_k eta_k*^3 cosh(z0 u/eta_k*) / (z0 (eta_k*^2-eta1^2) sinh(z0/eta_k*))
  //     = cosh(z0 u/eta1)/cosh(z0/eta1) - 1,
  // leaving a correction series with |c^2 - lambda(eta_k*)| = O(eta^2) and an
  // absolutely convergent ~k^-3 tail.
  const auto correction = [&](long k) {
    const Complex es = eta_star(k, rp);
    const Complex es2 = es * es;
    const Complex lam = lambda_value(es, rp);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // sinh(z0/eta_k*) = i(-1)^k
    return es * es2 * std::cos(pi * double(2 * k + 1) * u / 2.0) * (c2 - lam) /
           (lam * (es2 - rp.ac) * Complex(0.0, sign));
  };
  const SeriesResult s = sum_series(correction, tol);

  return lead - rp.lambda1 / c2 * (lead - 1.0) -
         2.0 * rp.lambda1 / (rp.z0 * c2) * s.value;
}

GResult g_quadrature(const DispersionContext& ctx, const Tolerance& tol) {
  const ReducedParams& rp = ctx.rp;
  const Complex lam_p = lambda_prime(ctx.eta0, rp);
  const Complex discrete = 2.0 * rp.lambda1 * ctx.eta0 * ctx.eta0 *
                           tanh_stable(rp.z0 / ctx.eta0) /
                           (rp.z0 * (rp.ac - ctx.eta0 * ctx.eta0) * lam_p);

  // even integrand: 2 * Int_0^1 tanh(z0/eta) eta^3 / (lambda+ lambda-) d eta
  const auto integrand = [&rp](double eta) {
    const auto [lp, lm] = lambda_pm(eta, rp);
    return tanh_stable(rp.z0 / eta) * (eta * eta * eta) / (lp * lm);
  };
  const IntegralResult I = integrate_finite(integrand, 0.0, 1.0, tol);

  GResult out;
  out.value = rp.lambda1 / rp.lambda_inf + discrete + rp.lambda1 / rp.z0 * I.value;
  out.method = GMethod::quadrature;
  out.terms_or_evals = I.evals;
  out.error_estimate = std::abs(rp.lambda1 / rp.z0) * I.error;
  return out;
}

GResult g_series(const ReducedParams& rp, const Tolerance& tol) {
  // The raw terms eta^4/(lambda (eta^2-ac)) fall off only like k^-2 until
  // eta_k*^2 drops below |ac|. Splitting 1/lambda = 1/c^2 + (c^2-lambda)/
  // (c^2 lambda) isolates a geometric part with the closed sum
  //   sum_k eta^4/(eta^2 - ac) = -z0^2/2 + (eta1 z0/2) tanh(z0/eta1)
  // (partial fractions against the (2k+1)^-2 ladder), leaving a k^-4 tail.
  const Complex c2 = rp.c_sq();
  const auto correction = [&rp, c2](long k) {
    const Complex es = eta_star(k, rp);
    const Complex es2 = es * es;
    if (std::abs(es2 - rp.ac) <
        1e-12 * std::max(std::abs(es2), std::abs(rp.ac)))
      throw SeriesError("g_series: eta_k*^2 - eta1^2 degenerate at k = " +
                        std::to_string(k));
    const Complex lam = lambda_value(es, rp);
    return es2 * es2 * (c2 - lam) / (c2 * lam * (es2 - rp.ac));
  };
  const SeriesResult s = sum_series(correction, tol);

  const Complex tanh1 = tanh_stable(rp.z0 / rp.eta1);
  const Complex geometric =
      -rp.z0 * rp.z0 / 2.0 + rp.eta1 * rp.z0 / 2.0 * tanh1;

  GResult out;
  out.value = rp.eta1 / rp.z0 * tanh1 -
              2.0 * rp.lambda1 / (rp.z0 * rp.z0) * (geometric / c2 + s.value);
  out.method = GMethod::series;
  out.terms_or_evals = s.terms_used;
  out.error_estimate =
      std::abs(2.0 * rp.lambda1 / (rp.z0 * rp.z0)) * s.last_term * double(s.terms_used);
  return out;
}

GResult g1(const ReducedParams& rp) {
  const Complex es = eta_star(0, rp);
  const Complex es2 = es * es;
  GResult out;
  out.value = rp.eta1 / rp.z0 * tanh_stable(rp.z0 / rp.eta1) -
              2.0 * rp.lambda1 * es2 * es2 /
                  (rp.z0 * rp.z0 * lambda_value(es, rp) * (es2 - rp.ac));
  out.method = GMethod::g1;
  out.terms_or_evals = 1;
  return out;
}

GResult g2(const DispersionContext& ctx) {
  const ReducedParams& rp = ctx.rp;
  const Complex e2 = ctx.eta0 * ctx.eta0;
  GResult out;
  out.value = rp.lambda1 / rp.lambda_inf +
              2.0 * rp.lambda1 * e2 * tanh_stable(rp.z0 / ctx.eta0) /
                  (rp.z0 * (rp.ac - e2) * lambda_prime(ctx.eta0, rp));
  out.method = GMethod::g2;
  out.terms_or_evals = 2;
  return out;
}

double relative_error_percent(const GResult& g_ref, const GResult& g_approx) {
  const double ref = std::abs(g_ref.value);
  if (ref == 0.0)
    throw std::invalid_argument("relative_error_percent: zero reference");
  return std::abs(g_ref.value - g_approx.value) / ref * 100.0;
}

}  // namespace pfilm
