#include "abtk/conjugation.hpp"

#include <algorithm>
#include <cmath>

#include "abtk/quadrature.hpp"
#include "abtk/tolerances.hpp"

namespace abtk {

SampledFunction nu_profile(const ScatteringData& sd) {
  std::vector<Complex> nu(sd.z_grid.size());
  for (std::size_t i = 0; i < sd.z_grid.size(); ++i) {
    const double one_minus = 1.0 - sd.r_abs[i] * sd.r_abs[i];
    if (one_minus <= tol::kReflectionUnitTol)
      throw ReflectionAtUnitModulus("1 - |r|^2 below tolerance at z = " +
                                    std::to_string(sd.z_grid[i]));
    nu[i] = -std::log(one_minus) / (2.0 * kPi);
  }
  return SampledFunction(sd.z_grid, std::move(nu));
}

namespace {

double nu_value(const ScatteringData& sd, double z) {
  const double ra = sd.r_abs_at(z);
  const double one_minus = 1.0 - ra * ra;
  if (one_minus <= tol::kReflectionUnitTol)
    throw ReflectionAtUnitModulus("1 - |r|^2 below tolerance at z0 interpolation");
  return -std::log(one_minus) / (2.0 * kPi);
}

// chi window on the band: [a_lo, z0] at +z0, [-z0, b_hi] at -z0, with the
// unit width clipped to the band.
double chi_corner(double z0, int sign) {
  if (sign > 0) return std::max(-z0, z0 - 1.0);
  return std::min(z0, 1.0 - z0);
}

constexpr double kGx6[6] = {-0.9324695142031521, -0.6612093864662645,
                            -0.2386191860831969, 0.2386191860831969,
                            0.6612093864662645,  0.9324695142031521};
constexpr double kGw6[6] = {0.1713244923791704, 0.3607615730481386,
                            0.4679139345726910, 0.4679139345726910,
                            0.3607615730481386, 0.1713244923791704};

// Gauss-Legendre quadrature of g over [a, b] split into graded panels that
// shrink by 1/2 toward the `toward` end (12 panels), plus uniform panels on
// any remaining smooth stretch.
template <typename F>
Complex graded_gauss(F&& g, double a, double b, double toward, int panels = 12) {
  if (b <= a) return 0.0;
  std::vector<double> cuts;
  cuts.push_back(a);
  const bool to_right = std::abs(toward - b) < std::abs(toward - a);
  // geometric grading: offsets from the singular end
  std::vector<double> off;
  double f = 1.0;
  for (int i = 0; i < panels - 1; ++i) {
    f *= 0.5;
    off.push_back(f);
  }
  const double len = b - a;
  if (to_right) {
    for (auto it = off.rbegin(); it != off.rend(); ++it) cuts.push_back(b - len * *it);
  } else {
    for (double o : off) cuts.push_back(a + len * o);
    std::sort(cuts.begin(), cuts.end());
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Complex acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double half = 0.5 * (cuts[i + 1] - cuts[i]);
    for (int q = 0; q < 6; ++q) acc += half * kGw6[q] * g(mid + half * kGx6[q]);
  }
  return acc;
}

// int over the band of [nu(s) - chi(s) nu_end] / (s - z), graded toward the
// active endpoint, split at the chi corner.  Safe at z = endpoint because the
// subtracted numerator vanishes there.
Complex beta_integral(const DeltaData& dd, int sign, Complex z) {
  const double z0 = dd.z0;
  const double corner = chi_corner(z0, sign);
  const double nu_end = sign > 0 ? dd.nu_z0 : dd.nu_minus_z0;
  auto nu_at = [&](double s) { return dd.nu.interp(s).real(); };
  auto plain = [&](double s) { return Complex(nu_at(s)) / (s - z); };
  auto subtracted = [&](double s) { return Complex(nu_at(s) - nu_end) / (s - z); };
  if (sign > 0) {
    return graded_gauss(plain, -z0, corner, corner) +
           graded_gauss(subtracted, corner, z0, z0);
  }
  return graded_gauss(subtracted, -z0, corner, -z0) +
         graded_gauss(plain, corner, z0, corner);
}

}  // namespace

DeltaData build_delta_data(const ScatteringData& sd, double z0,
                           const QuadratureSpec& spec) {
  sd.validate();
  if (!(z0 > 0.0)) throw InvalidInput("build_delta_data: z0 must be positive");
  if (z0 >= sd.z_grid.back() || -z0 <= sd.z_grid.front())
    throw InvalidInput("build_delta_data: z0 outside the spectral grid");

  DeltaData dd;
  dd.z0 = z0;
  const SampledFunction nu_full = nu_profile(sd);
  std::vector<double> grid;
  std::vector<Complex> vals;
  grid.push_back(-z0);
  vals.push_back(nu_value(sd, -z0));
  for (std::size_t i = 0; i < nu_full.size(); ++i) {
    const double s = nu_full.grid[i];
    if (s > -z0 && s < z0) {
      grid.push_back(s);
      vals.push_back(nu_full.values[i]);
    }
  }
  grid.push_back(z0);
  vals.push_back(nu_value(sd, z0));
  dd.nu = SampledFunction(std::move(grid), std::move(vals));
  dd.nu_z0 = dd.nu.values.back().real();
  dd.nu_minus_z0 = dd.nu.values.front().real();
  dd.tail_coefficient = integrate_samples(dd.nu);
  dd.delta0_plus = delta0(+1, dd, spec);
  dd.delta0_minus = delta0(-1, dd, spec);
  return dd;
}

Complex delta(Complex z, const DeltaData& dd, const QuadratureSpec& spec) {
  if (z.imag() == 0.0 && z.real() >= -dd.z0 && z.real() <= dd.z0)
    throw OnBand("delta: z on the closed band, use delta_boundary");
  return std::exp(iu() * cauchy_integral(dd.nu, z, spec));
}

std::pair<Complex, Complex> delta_boundary(double s, const DeltaData& dd,
                                           const QuadratureSpec& spec) {
  const double w = spec.pv_window > 0.0
                       ? spec.pv_window
                       : 2.0 * (dd.nu.grid[1] - dd.nu.grid[0]);
  if (s - dd.nu.front() < w || dd.nu.back() - s < w)
    throw TooCloseToEndpoint("delta_boundary: s within one pv window of the band edge");
  const Complex pv = pv_cauchy(dd.nu, s, spec);
  const double nus = dd.nu.interp(s).real();
  const Complex dplus = std::exp(iu() * pv - kPi * nus);
  const Complex dminus = std::exp(iu() * pv + kPi * nus);
  return {dplus, dminus};
}

Complex beta_phase(Complex z, int endpoint_sign, const DeltaData& dd,
                   const QuadratureSpec& spec) {
  (void)spec;
  if (endpoint_sign != 1 && endpoint_sign != -1)
    throw InvalidInput("beta_phase: endpoint_sign must be +-1");
  const double z0 = dd.z0;
  const double end = endpoint_sign > 0 ? z0 : -z0;
  const double corner = chi_corner(z0, endpoint_sign);
  const double nu_end = endpoint_sign > 0 ? dd.nu_z0 : dd.nu_minus_z0;
  Complex log_term;
  if (z == Complex(end)) {
    // Endpoint evaluation keeps the log real (modulus convention), so that
    // delta0 stays unimodular for real nu.
    log_term = std::log(std::abs(end - corner));
  } else {
    log_term = std::log(z - corner);
  }
  const Complex integral = beta_integral(dd, endpoint_sign, z);
  const double sgn = endpoint_sign > 0 ? -1.0 : 1.0;
  return sgn * nu_end * log_term + integral;
}

Complex delta0(int endpoint_sign, const DeltaData& dd, const QuadratureSpec& spec) {
  const double end = endpoint_sign > 0 ? dd.z0 : -dd.z0;
  return std::exp(iu() * beta_phase(Complex(end), endpoint_sign, dd, spec));
}

}  // namespace abtk
