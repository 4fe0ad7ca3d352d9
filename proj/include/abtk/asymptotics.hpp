#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abtk/local_model.hpp"
#include "abtk/phase.hpp"

namespace abtk {

struct AsymptoticSolution {
  double x = 0.0;
  double t = 0.0;
  double z0 = 0.0;
  Complex A_leading;
  double B_leading = 0.0;
  std::string error_order = "O(t^-1)";
};

// Leading-order A along the ray: 4 sqrt(z0^3 / (-alpha t)) i (beta+ - beta-),
// where beta+- are the phase-point coefficients dressed with the unimodular
// ray factors delta0^{-2}, scale^{-+2 i nu} and e^{-+ i alpha t / z0}.
Complex leading_A(const LocalModel& lm, const RayCoordinates& ray);

// Leading-order B vanishes; the first correction is carried as the
// error-order tag only.
double leading_B(const LocalModel& lm, const RayCoordinates& ray);

AsymptoticSolution evaluate_asymptotics(const ScatteringData& sd, double alpha,
                                        double x, double t,
                                        const QuadratureSpec& spec = {});

// leading_A swept over x at fixed t.  Per-sample degenerate data (vanishing
// r at a phase point) yields 0 and a note; other errors propagate.
SampledFunction envelope_profile(const ScatteringData& sd, double alpha, double t,
                                 const std::vector<double>& x_samples,
                                 const QuadratureSpec& spec = {},
                                 std::vector<std::string>* notes = nullptr);

}  // namespace abtk
