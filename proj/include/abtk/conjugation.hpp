#pragma once

#include "abtk/scattering.hpp"
#include "abtk/types.hpp"

namespace abtk {

// Scalar conjugation data on the band [-z0, z0]:
//   nu(s) = -(1/2pi) log(1 - |r(s)|^2), delta(z) = exp(i int nu(s)/(s-z) ds),
// endpoint constants delta0(+-z0) and the large-z tail coefficient int nu ds.
struct DeltaData {
  double z0 = 0.0;
  SampledFunction nu;          // on [-z0, z0], endpoints included
  double nu_z0 = 0.0;          // nu(+z0)
  double nu_minus_z0 = 0.0;    // nu(-z0)
  Complex delta0_plus;         // delta0(+z0), unimodular
  Complex delta0_minus;        // delta0(-z0), unimodular
  Complex tail_coefficient;    // int_{-z0}^{z0} nu(s) ds
};

// Nodewise nu over the full spectral grid; ReflectionAtUnitModulus when
// 1 - |r|^2 falls below tolerance anywhere.
SampledFunction nu_profile(const ScatteringData& sd);

// Band restriction + endpoint interpolation + endpoint constants.
DeltaData build_delta_data(const ScatteringData& sd, double z0,
                           const QuadratureSpec& spec = {});

// delta(z) for z off the closed band (OnBand otherwise).
Complex delta(Complex z, const DeltaData& dd, const QuadratureSpec& spec = {});

// Boundary values (delta_plus, delta_minus) at s strictly inside the band,
// at least one pv window away from the endpoints.
std::pair<Complex, Complex> delta_boundary(double s, const DeltaData& dd,
                                           const QuadratureSpec& spec = {});

// beta(z, +-z0): the regularized phase whose endpoint value gives delta0.
// endpoint_sign is +1 or -1.  Uses principal logs; at the endpoint itself
// the log argument is taken by modulus, which keeps beta real there.
Complex beta_phase(Complex z, int endpoint_sign, const DeltaData& dd,
                   const QuadratureSpec& spec = {});

// delta0(+-z0) = exp(i beta(+-z0, +-z0)).
Complex delta0(int endpoint_sign, const DeltaData& dd,
               const QuadratureSpec& spec = {});

}  // namespace abtk
