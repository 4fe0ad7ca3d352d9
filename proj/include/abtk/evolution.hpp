#pragma once

#include <functional>
#include <vector>

#include "abtk/scattering.hpp"
#include "abtk/types.hpp"

namespace abtk {

struct FieldState {
  std::vector<double> x;
  std::vector<Complex> A;
  std::vector<double> B;
  double t = 0.0;

  static FieldState from_initial(const InitialData& data);
};

struct EvolveConfig {
  double dt = 0.01;
  double fixed_point_tol = 1e-12;
  int fixed_point_max_iter = 60;
  double t_end = 0.0;
  int escape_check_every = 50;  // steps between left-edge escape checks
  bool check_stability = true;

  void validate(double max_amp) const;
};

// Self-consistent (A_t, B) from the inverted system
//   A_t(x) = int_{-inf}^{x} (alpha A + beta A B) dy,
//   B(x)   = -gamma int_{-inf}^{x} Re(conj(A) A_t) dy,
// with vanishing data at the left end, damped fixed-point iteration on the
// A_t <-> B coupling.
struct RhsResult {
  std::vector<Complex> A_t;
  std::vector<double> B;
  int iterations = 0;
};
RhsResult rhs(const FieldState& state, const ModelParameters& params,
              const EvolveConfig& cfg);

// One classical RK4 step in t; B is recomputed at the new state.
FieldState step(const FieldState& state, const ModelParameters& params,
                const EvolveConfig& cfg);

struct EvolveReport {
  int max_fixed_point_iterations = 0;
  double right_edge_amplitude = 0.0;   // monitored, not fatal (outflow side)
  double right_boundary_defect = 0.0;  // final int (alpha A + beta A B) dx
  double l2_initial = 0.0;
  double l2_final = 0.0;
};

using SnapshotCallback = std::function<void(const FieldState&)>;

// March to cfg.t_end, invoking `snap` after the step that reaches each
// checkpoint time.  DomainEscape when amplitude reaches the inflow (left)
// edge zone.
FieldState evolve(const InitialData& data, const ModelParameters& params,
                  const EvolveConfig& cfg, EvolveReport* report = nullptr,
                  const std::vector<double>& checkpoints = {},
                  const SnapshotCallback& snap = nullptr);

struct ComparePoint {
  double t = 0.0;
  double x_ray = 0.0;
  Complex a_numeric;
  Complex a_leading;
  double residual = 0.0;
  double b_numeric = 0.0;
};

struct CompareReport {
  std::vector<ComparePoint> points;
  double fitted_decay_exponent = 0.0;  // of |a_numeric - a_leading| vs t
  double final_ratio = 0.0;            // |a_numeric| / |a_leading| at last checkpoint
};

// Evolve the data and compare |A| against the leading-order formula along
// the z0-ray at the checkpoint times.
CompareReport compare_asymptotics(const InitialData& data, const ModelParameters& params,
                                  double ray_z0, const std::vector<double>& t_checkpoints,
                                  const EvolveConfig& cfg, const ScatteringData& sd);

// Cubic interpolation of a field column at x.
Complex field_at(const FieldState& state, double x);

}  // namespace abtk
