#include "abtk/local_model.hpp"

#include <cmath>

#include "abtk/phase.hpp"
#include "abtk/special_functions.hpp"
#include "abtk/tolerances.hpp"

namespace abtk {

namespace {

double nu_of_rho(Complex rho) {
  const double one_minus = 1.0 - std::norm(rho);
  if (one_minus <= tol::kReflectionUnitTol)
    throw ReflectionAtUnitModulus("model parameter with |rho| >= 1");
  return -std::log(one_minus) / (2.0 * kPi);
}

}  // namespace

Complex model_beta12(Complex rho, double nu) {
  if (std::abs(rho) < tol::kZeroReflection) return 0.0;
  return -std::sqrt(2.0 * kPi) * std::exp(-0.5 * kPi * nu) *
         std::polar(1.0, 0.25 * kPi) / (rho * complex_gamma(-iu(nu)));
}

Complex model_beta12_mirror(Complex rho, double nu) {
  if (std::abs(rho) < tol::kZeroReflection) return 0.0;
  return std::sqrt(2.0 * kPi) * std::exp(-0.5 * kPi * nu) *
         std::polar(1.0, -0.25 * kPi) / (rho * complex_gamma(iu(nu)));
}

LocalModel build_local_model(const ScatteringData& sd, const DeltaData& dd,
                             const RayCoordinates& ray) {
  if (std::abs(dd.z0 - ray.z0) > 1e-12 * std::max(1.0, ray.z0))
    throw InvalidInput("build_local_model: DeltaData built on a different ray");
  LocalModel lm;
  lm.z0 = ray.z0;
  lm.r_plus = sd.r_at(ray.z0);
  lm.r_minus = sd.r_at(-ray.z0);
  if (std::abs(lm.r_plus) < tol::kZeroReflection ||
      std::abs(lm.r_minus) < tol::kZeroReflection)
    throw ZeroReflectionAtPhasePoint(
        "r vanishes at a phase point; leading coefficient degenerates to 0");
  lm.nu_plus = dd.nu_z0;
  lm.nu_minus = dd.nu_minus_z0;
  lm.a1 = iu(lm.nu_plus);
  lm.a2 = iu(lm.nu_minus);
  lm.delta0_plus = dd.delta0_plus;
  lm.delta0_minus = dd.delta0_minus;
  lm.beta12_plus = model_beta12(lm.r_plus, lm.nu_plus);
  lm.beta21_plus = lm.nu_plus / lm.beta12_plus;
  lm.beta12_minus = model_beta12_mirror(lm.r_minus, lm.nu_minus);
  lm.beta21_minus = lm.nu_minus / lm.beta12_minus;
  return lm;
}

Mat2 pc_model_matrix(Complex rho, Complex k, int half_plane) {
  if (half_plane == 0) {
    if (k.imag() == 0.0)
      throw InvalidInput("pc_model_matrix: pick a side on the real axis");
    half_plane = k.imag() > 0.0 ? 1 : -1;
  }
  const double nu = nu_of_rho(rho);
  const Complex a = iu(nu);
  const Complex q = -model_beta12(rho, nu);
  const Complex p = nu / q;

  // Rotations that keep the Weber asymptotic sector on the chosen side:
  // entries of order a go with e^{-3 i pi/4} (upper) / e^{i pi/4} (lower),
  // entries of order -a with e^{-i pi/4} (upper) / e^{3 i pi/4} (lower).
  const bool up = half_plane > 0;
  const Complex c11 = std::polar(1.0, up ? -0.75 * kPi : 0.25 * kPi);
  const Complex c22 = std::polar(1.0, up ? -0.25 * kPi : 0.75 * kPi);
  const double pre11 = std::exp(up ? -0.75 * kPi * nu : 0.25 * kPi * nu);
  const double pre22 = std::exp(up ? 0.25 * kPi * nu : -0.75 * kPi * nu);

  const auto [d11, d11p] = parabolic_cylinder_d_with_derivative(a, c11 * k);
  const auto [d22, d22p] = parabolic_cylinder_d_with_derivative(-a, c22 * k);

  const Complex phi11 = pre11 * d11;
  const Complex phi22 = pre22 * d22;
  // d/dk of the entries, then the first-order-system combinations.
  const Complex dphi11 = pre11 * c11 * d11p;
  const Complex dphi22 = pre22 * c22 * d22p;
  const Complex phi21 = (dphi11 + iu(0.5) * k * phi11) / q;
  const Complex phi12 = (dphi22 - iu(0.5) * k * phi22) / p;
  return {phi11, phi12, phi21, phi22};
}

Mat2 pc_model_matrix_mirror(Complex rho, Complex k, int half_plane) {
  if (half_plane == 0) {
    if (k.imag() == 0.0)
      throw InvalidInput("pc_model_matrix_mirror: pick a side on the real axis");
    half_plane = k.imag() > 0.0 ? 1 : -1;
  }
  const Mat2 m = pc_model_matrix(std::conj(rho), -k, -half_plane);
  return {m[3], m[2], m[1], m[0]};  // sigma1 M sigma1
}

Mat2 n_matrix(int endpoint_sign, Complex k, const LocalModel& lm, int half_plane) {
  if (endpoint_sign == 1) return pc_model_matrix(lm.r_plus, k, half_plane);
  if (endpoint_sign == -1) return pc_model_matrix_mirror(lm.r_minus, k, half_plane);
  throw InvalidInput("n_matrix: endpoint_sign must be +-1");
}

std::tuple<Complex, Complex, Complex> mtilde1_from_beta(const LocalModel& lm) {
  return {iu() * lm.beta12_plus, -iu() * lm.beta12_minus, Complex(0.0)};
}

}  // namespace abtk
