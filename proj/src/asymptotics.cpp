#include "abtk/asymptotics.hpp"

#include <cmath>
#include <map>

#include "abtk/tolerances.hpp"

namespace abtk {

namespace {

Complex unit_power(double base, double exponent_times_i) {
  // base^{i * exponent_times_i} for base > 0: unimodular.
  return std::polar(1.0, exponent_times_i * std::log(base));
}

}  // namespace

Complex leading_A(const LocalModel& lm, const RayCoordinates& ray) {
  const double z0 = ray.z0;
  const double scale2 = z0 * z0 * z0 / (-ray.alpha * ray.t);
  if (!(scale2 > 0.0)) throw WrongRegime("leading_A: ray outside alpha x < 0, t > 0");
  const double eps = std::sqrt(scale2);
  const double phase_t = ray.alpha * ray.t / z0;

  // rho+- = r(+-z0) * u+-;  the beta formulas are ~ 1/rho, so dressing the
  // stored bare coefficients means dividing by u.
  const Complex u_plus = (1.0 / (lm.delta0_plus * lm.delta0_plus)) *
                         unit_power(eps, -2.0 * lm.nu_plus) *
                         std::polar(1.0, -phase_t);
  const Complex u_minus = (1.0 / (lm.delta0_minus * lm.delta0_minus)) *
                          unit_power(eps, 2.0 * lm.nu_minus) *
                          std::polar(1.0, phase_t);
  const Complex beta_plus = lm.beta12_plus / u_plus;
  const Complex beta_minus = lm.beta12_minus / u_minus;
  return 4.0 * eps * iu() * (beta_plus - beta_minus);
}

double leading_B(const LocalModel& lm, const RayCoordinates& ray) {
  (void)lm;
  (void)ray;
  return 0.0;
}

AsymptoticSolution evaluate_asymptotics(const ScatteringData& sd, double alpha,
                                        double x, double t,
                                        const QuadratureSpec& spec) {
  const RayCoordinates ray = RayCoordinates::make(alpha, x, t);
  AsymptoticSolution out;
  out.x = x;
  out.t = t;
  out.z0 = ray.z0;
  try {
    const DeltaData dd = build_delta_data(sd, ray.z0, spec);
    const LocalModel lm = build_local_model(sd, dd, ray);
    out.A_leading = leading_A(lm, ray);
    out.B_leading = leading_B(lm, ray);
  } catch (const ZeroReflectionAtPhasePoint&) {
    out.A_leading = 0.0;  // nu = 0 limit of the modulus identity
    out.B_leading = 0.0;
  }
  return out;
}

SampledFunction envelope_profile(const ScatteringData& sd, double alpha, double t,
                                 const std::vector<double>& x_samples,
                                 const QuadratureSpec& spec,
                                 std::vector<std::string>* notes) {
  for (double x : x_samples)
    if (!(alpha * x < 0.0))
      throw WrongRegime("envelope_profile: sample with alpha x >= 0");
  std::vector<Complex> values(x_samples.size());
  std::map<double, DeltaData> cache;  // keyed by z0; x sweeps often repeat rays
  for (std::size_t i = 0; i < x_samples.size(); ++i) {
    const RayCoordinates ray = RayCoordinates::make(alpha, x_samples[i], t);
    try {
      auto it = cache.find(ray.z0);
      if (it == cache.end())
        it = cache.emplace(ray.z0, build_delta_data(sd, ray.z0, spec)).first;
      const LocalModel lm = build_local_model(sd, it->second, ray);
      values[i] = leading_A(lm, ray);
    } catch (const ZeroReflectionAtPhasePoint&) {
      values[i] = 0.0;
      if (notes)
        notes->push_back("x = " + std::to_string(x_samples[i]) +
                         ": r vanishes at a phase point, leading term 0");
    }
  }
  return SampledFunction(x_samples, std::move(values));
}

}  // namespace abtk
