#include "pfilm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace pfilm {

void Tolerance::validate() const {
  if (!(rel > 0.0)) throw std::invalid_argument("Tolerance: rel must be > 0");
  if (!(abs >= 0.0)) throw std::invalid_argument("Tolerance: abs must be >= 0");
  if (max_evals < 64) throw std::invalid_argument("Tolerance: max_evals must be >= 64");
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; node 0 shared).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  Complex fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(mid - half * xgk[i]);
    fv[14 - i] = f(mid + half * xgk[i]);
  }
  fv[7] = f(mid);

  Complex kronrod = 0.0, gauss = 0.0;
  double resabs = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Complex pair = (i < 7) ? fv[i] + fv[14 - i] : fv[7];
    kronrod += wgk[i] * pair;
    resabs += wgk[i] * ((i < 7) ? std::abs(fv[i]) + std::abs(fv[14 - i])
                                : std::abs(fv[7]));
  }
  for (int i = 0; i < 4; ++i) {
    const int j = 2 * i + 1;  // Gauss nodes sit at the odd Kronrod indices
    gauss += wg[i] * ((i < 3) ? fv[j] + fv[14 - j] : fv[7]);
  }

  const Complex mean = kronrod * 0.5;
  double resasc = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (i < 7)
      resasc += wgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    else
      resasc += wgk[i] * std::abs(fv[7] - mean);
  }
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(kronrod - gauss) * std::abs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, eps50);

  Segment s{a, b, kronrod * half, err};
  if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag()))
    throw QuadratureError("integrand returned a non-finite value in [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]",
                          s.value, err);
  return s;
}

}  // namespace

IntegralResult integrate_finite(const std::function<Complex(double)>& f,
                                double a, double b, const Tolerance& tol) {
  tol.validate();
  if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");

  std::priority_queue<Segment> queue;
  queue.push(gk15(f, a, b));
  long evals = 15;
  Complex total = queue.top().value;
  double total_err = queue.top().error;

  while (total_err > std::max(tol.abs, tol.rel * std::abs(total))) {
    if (evals + 30 > tol.max_evals)
      throw QuadratureError("integrate_finite: evaluation budget exhausted (" +
                                std::to_string(evals) + " evals, error " +
                                std::to_string(total_err) + ")",
                            total, total_err);
    Segment worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b)
      throw QuadratureError("integrate_finite: interval collapsed at x = " +
                                std::to_string(m),
                            total, total_err);
    Segment left = gk15(f, worst.a, m);
    Segment right = gk15(f, m, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return {total, total_err, evals};
}

IntegralResult integrate_semi_infinite(const std::function<Complex(double)>& f,
                                       double a, const Tolerance& tol) {
  if (!std::isfinite(a)) throw std::invalid_argument("integrate_semi_infinite: bad lower limit");
  const double shift = a - 1.0;
  auto g = [&f, shift](double u) {
    const double t = shift + 1.0 / u;
    const Complex v = f(t);
    return v / (u * u);
  };
  return integrate_finite(g, 0.0, 1.0, tol);
}

SeriesResult sum_series(const std::function<Complex(long)>& term, const Tolerance& tol) {
  tol.validate();
  Complex partial = 0.0;
  int small_run = 0;
  double last = 0.0;
  for (long k = 0; k < tol.max_evals; ++k) {
    const Complex t = term(k);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw SeriesError("sum_series: non-finite term at k = " + std::to_string(k));
    partial += t;
    last = std::abs(t);
    if (last < std::max(tol.abs, tol.rel * std::abs(partial))) {
      if (++small_run == 3) return {partial, k + 1, last};
    } else {
      small_run = 0;
    }
  }
  throw SeriesError("sum_series: no convergence within " +
                    std::to_string(tol.max_evals) + " terms");
}

RootResult newton_polish(const std::function<Complex(Complex)>& f,
                         const std::function<Complex(Complex)>& fprime,
                         Complex z_init, const Tolerance& tol) {
  tol.validate();
  constexpr int max_iter = 50;
  Complex z = z_init;
  Complex fz = f(z);
  double res = std::abs(fz);
  RootResult out{z, res, 0, {res}};

  for (int it = 0; it < max_iter; ++it) {
    if (res <= tol.abs) {
      out.root = z;
      out.residual = res;
      out.iterations = it;
      return out;
    }
    const Complex d = fprime(z);
    if (std::abs(d) < 1e-300 * (1.0 + res))
      throw RootError("newton_polish: derivative underflow", z);
    Complex step = fz / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) ||
        std::abs(step) > 1e8 * (1.0 + std::abs(z)))
      throw RootError("newton_polish: diverging step", z);

    // accept only residual-decreasing steps; halve on overshoot
    bool accepted = false;
    for (int halving = 0; halving < 12; ++halving) {
      const Complex z_new = z - step;
      const Complex f_new = f(z_new);
      const double r_new = std::abs(f_new);
      if (std::isfinite(r_new) && r_new < res) {
        z = z_new;
        fz = f_new;
        res = r_new;
        out.residual_history.push_back(res);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // flat spot at machine precision is success if it already meets tol
      if (res <= tol.abs) break;
      throw RootError("newton_polish: stalled (no residual decrease)", z);
    }
  }
  if (res > tol.abs)
    throw RootError("newton_polish: residual " + std::to_string(res) +
                        " above tolerance after 50 iterations",
                    z);
  out.root = z;
  out.residual = res;
  out.iterations = max_iter;
  return out;
}

std::vector<Complex> unwrapped_log_ratio(const std::function<Complex(double)>& g,
                                         std::span<const double> grid) {
  if (grid.size() < 2)
    throw std::invalid_argument("unwrapped_log_ratio: need at least 2 grid points");
  std::vector<Complex> out(grid.size());
  Complex prev = g(grid[0]);
  if (prev == Complex(0.0) || !std::isfinite(std::abs(prev)))
    throw BranchError("unwrapped_log_ratio: g vanished at the first grid point");
  double phase = std::arg(prev);  // principal at the first point
  out[0] = Complex(std::log(std::abs(prev)), phase);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("unwrapped_log_ratio: grid not strictly increasing");
    const Complex cur = g(grid[i]);
    if (cur == Complex(0.0) || !std::isfinite(std::abs(cur)))
      throw BranchError("unwrapped_log_ratio: g vanished at tau = " +
                        std::to_string(grid[i]));
    const double dphi = std::arg(cur / prev);
    if (std::abs(dphi) >= 3.14159265358979323846 * (1.0 - 1e-12))
      throw BranchError("unwrapped_log_ratio: phase step >= pi near tau = " +
                        std::to_string(grid[i]) + " (grid too coarse)");
    phase += dphi;
    out[i] = Complex(std::log(std::abs(cur)), phase);
    prev = cur;
  }
  return out;
}

}  // namespace pfilm
