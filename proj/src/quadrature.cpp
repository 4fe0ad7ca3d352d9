#include "abtk/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "abtk/tolerances.hpp"

namespace abtk {

namespace {

// 4-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGx[4] = {-0.8611363115940526, -0.3399810435848563,
                           0.3399810435848563, 0.8611363115940526};
constexpr double kGw[4] = {0.3478548451374538, 0.6521451548625461,
                           0.6521451548625461, 0.3478548451374538};

// Quadrature of g(s) = f(s)/(s - z) over [a, b] with f linear between the
// interpolation endpoints fa, fb.
Complex panel(const QuadratureSpec& spec, double a, double b, Complex fa, Complex fb,
              Complex z) {
  const double h = b - a;
  auto fl = [&](double s) { return fa + (fb - fa) * ((s - a) / h); };
  Complex acc = 0.0;
  const int m = spec.refinement;
  if (spec.rule == QuadratureSpec::Rule::Trapezoid) {
    for (int j = 0; j < m; ++j) {
      const double s0 = a + h * j / m, s1 = a + h * (j + 1) / m;
      acc += 0.5 * (s1 - s0) * (fl(s0) / (s0 - z) + fl(s1) / (s1 - z));
    }
  } else {
    for (int j = 0; j < m; ++j) {
      const double s0 = a + h * j / m, s1 = a + h * (j + 1) / m;
      const double mid = 0.5 * (s0 + s1), half = 0.5 * (s1 - s0);
      for (int q = 0; q < 4; ++q) {
        const double s = mid + half * kGx[q];
        acc += half * kGw[q] * fl(s) / (s - z);
      }
    }
  }
  return acc;
}

// Sum the panel rule over [lo, hi] (clipped to the sample interval), walking
// the native panels of f and splitting at the clip points.
Complex integrate_range(const SampledFunction& f, double lo, double hi, Complex z,
                        const QuadratureSpec& spec) {
  Complex acc = 0.0;
  const auto& g = f.grid;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    double a = std::max(g[i], lo), b = std::min(g[i + 1], hi);
    if (b <= a) continue;
    acc += panel(spec, a, b, f.interp(a), f.interp(b), z);
  }
  return acc;
}

double local_step(const SampledFunction& f, double x) {
  const auto& g = f.grid;
  auto it = std::upper_bound(g.begin(), g.end(), x);
  if (it == g.begin()) return g[1] - g[0];
  if (it == g.end()) return g[g.size() - 1] - g[g.size() - 2];
  const std::size_t i = static_cast<std::size_t>(it - g.begin());
  return g[i] - g[i - 1];
}

}  // namespace

Complex pv_cauchy(const SampledFunction& f, double x, const QuadratureSpec& spec) {
  const double span = f.back() - f.front();
  double w = spec.pv_window > 0.0 ? spec.pv_window : 2.0 * local_step(f, x);
  w = std::min(w, std::min(x - f.front(), f.back() - x));
  if (w <= 0.0) throw TooCloseToEndpoint("pv_cauchy: window does not fit inside interval");
  (void)span;

  // Outside the window: the panel rule.
  Complex acc = integrate_range(f, f.front(), x - w, x, spec);
  acc += integrate_range(f, x + w, f.back(), x, spec);

  // Inside: PV int f(s)/(s-x) ds = int_0^w [f(x+u) - f(x-u)]/u du, evaluated
  // exactly for the piecewise-linear interpolant.  g(u) below is that odd
  // part; it vanishes at u = 0 so the first cell integrates m*u/u = m.
  std::vector<double> knots{0.0, w};
  for (double gnode : f.grid) {
    const double d = std::abs(gnode - x);
    if (d > 0.0 && d < w) knots.push_back(d);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  auto odd = [&](double u) { return f.interp(x + u) - f.interp(x - u); };
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double u0 = knots[i], u1 = knots[i + 1];
    const Complex g0 = odd(u0), g1 = odd(u1);
    const Complex slope = (g1 - g0) / (u1 - u0);
    if (u0 == 0.0) {
      acc += slope * (u1 - u0);
    } else {
      acc += slope * (u1 - u0) + (g0 - slope * u0) * std::log(u1 / u0);
    }
  }
  return acc;
}

Complex cauchy_integral(const SampledFunction& f, Complex z, const QuadratureSpec& spec) {
  f.validate();
  spec.validate();
  const bool on_axis = z.imag() == 0.0;
  const bool inside = on_axis && z.real() > f.front() && z.real() < f.back();
  if (!inside) {
    if (on_axis && (z.real() == f.front() || z.real() == f.back()))
      throw TooCloseToEndpoint("cauchy_integral: pole at an interval endpoint");
    return integrate_range(f, f.front(), f.back(), z, spec);
  }
  const double x = z.real();
  const double scale = std::max(std::abs(f.front()), std::abs(f.back()));
  for (double gnode : f.grid)
    if (std::abs(gnode - x) <= tol::kPvNodeEps * std::max(1.0, scale))
      throw PoleOnNode("cauchy_integral: PV pole coincides with a grid node");
  return pv_cauchy(f, x, spec);
}

SampledFunction cumulative_integral(const SampledFunction& f) {
  f.validate();
  std::vector<Complex> out(f.size());
  out[0] = 0.0;
  for (std::size_t i = 1; i < f.size(); ++i)
    out[i] = out[i - 1] +
             0.5 * (f.grid[i] - f.grid[i - 1]) * (f.values[i] + f.values[i - 1]);
  return SampledFunction(f.grid, std::move(out));
}

Complex integrate_samples(const SampledFunction& f) {
  Complex acc = 0.0;
  for (std::size_t i = 1; i < f.size(); ++i)
    acc += 0.5 * (f.grid[i] - f.grid[i - 1]) * (f.values[i] + f.values[i - 1]);
  return acc;
}

}  // namespace abtk
