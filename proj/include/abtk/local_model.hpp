#pragma once

#include <tuple>

#include "abtk/conjugation.hpp"
#include "abtk/scattering.hpp"
#include "abtk/types.hpp"

namespace abtk {

struct RayCoordinates;

// Parabolic-cylinder model data at the phase points.  beta12/beta21 are the
// bare coefficients built from r(+-z0) alone; the ray-dependent unimodular
// dressing (delta0^{-2}, scale^{+-2 i nu}, e^{-+ i alpha t / z0}) is applied
// by the asymptotics evaluator.
struct LocalModel {
  double z0 = 0.0;
  double nu_plus = 0.0, nu_minus = 0.0;
  Complex a1, a2;                    // i nu(+z0), i nu(-z0)
  Complex r_plus, r_minus;           // r(+-z0)
  Complex delta0_plus, delta0_minus;
  Complex beta12_plus, beta21_plus;
  Complex beta12_minus, beta21_minus;
};

// Bare coefficient of the (1,2) first moment for the model with jump
// parameter rho:  beta12(rho, nu) = -sqrt(2 pi) e^{-pi nu/2} e^{i pi/4} /
// (rho Gamma(-i nu)).  Satisfies |beta12|^2 = nu.
Complex model_beta12(Complex rho, double nu);
// Mirror coefficient at -z0: +sqrt(2 pi) e^{-pi nu/2} e^{-i pi/4} /
// (rho Gamma(i nu)); also |.|^2 = nu.
Complex model_beta12_mirror(Complex rho, double nu);

LocalModel build_local_model(const ScatteringData& sd, const DeltaData& dd,
                             const RayCoordinates& ray);

// Explicit parabolic-cylinder matrix of the local model (test surface).
// half_plane: +1 upper, -1 lower, 0 = pick by sign(Im k) (error on the axis).
Mat2 n_matrix(int endpoint_sign, Complex k, const LocalModel& lm, int half_plane = 0);

// Solution of the constant-jump model N+ = N- V(rho) on the real line with
// V = [[1-|rho|^2, -conj(rho)], [rho, 1]] and N ~ k^{i nu sigma3}
// e^{-i k^2/4 sigma3}; exposed for the jump-identity tests.
Mat2 pc_model_matrix(Complex rho, Complex k, int half_plane);
// Mirror model sigma1 N(-k) sigma1 (the -z0 branch).
Mat2 pc_model_matrix_mirror(Complex rho, Complex k, int half_plane);

// First-moment entries fed to the reconstruction:
// ((M1_+)_{12}, (M1_-)_{12}, (M1_+-)_{11} = 0), from the bare betas.
std::tuple<Complex, Complex, Complex> mtilde1_from_beta(const LocalModel& lm);

}  // namespace abtk
