#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abtk/types.hpp"

namespace abtk {

// Parameters of the coupled AB system A_xt = alpha A + beta A B,
// B_x = -(gamma/2) (|A|^2)_t, restricted to beta*gamma = -1.
struct ModelParameters {
  double alpha = -1.0;
  double beta = 1.0;
  double gamma = -1.0;
  void validate() const;
};

struct Profile {
  std::string name;   // "zero" | "sech" | "gauss"
  double amplitude = 0.3;
};

// Sampled initial data on a uniform grid [-L, L].  When built from a named
// profile the analytic form is kept so ODE integrators can evaluate off-node
// points exactly; raw-sample inputs fall back to 4-point interpolation.
struct InitialData {
  std::vector<double> x_grid;
  std::vector<Complex> A0;
  std::vector<double> B0;
  std::optional<Profile> profile;

  void validate() const;
  double dx() const { return x_grid[1] - x_grid[0]; }
  double half_length() const { return x_grid.back(); }
  bool b0_nonzero() const;
  Complex a_at(double x) const;  // analytic when profile is set
};

InitialData make_initial_data(const std::string& profile, double amplitude, double L,
                              int n, double center = 0.0);

enum class Side { Left, Right };   // launch endpoint of the Jost solution

// Columns of the Jost solutions at a reference point, plus the spectral
// parameter they belong to.
struct JostPair {
  Complex z;
  Vec2 psi_minus_col1, psi_plus_col2, psi_minus_col2, psi_plus_col1;
};

// Single Jost column at x_ref.  col is 1 or 2.  For complex z only the
// analyticity-matched combinations stay bounded (col 1 from the left and
// col 2 from the right in the upper half plane); a wrong combination blows
// up and raises BlowUp.  substeps > 1 halves the integration step (used by
// the self-convergence oracles).
Vec2 jost_column(const InitialData& data, Complex z, Side side, int col,
                 double x_ref = 0.0, int substeps = 1);

// Both columns for real z.
JostPair jost_solve(const InitialData& data, Complex z, double x_ref = 0.0,
                    int substeps = 1);

// s11 = det(psi_-^1, psi_+^2), s21 = e^{-2 i z x_ref} det(psi_+^1, psi_-^1),
// both at t = 0.
std::pair<Complex, Complex> scattering_coefficients(const InitialData& data, double z,
                                                    double x_ref = 0.0,
                                                    int substeps = 1);

// s11 continued into the closed upper half plane (winding-number support).
Complex s11_upper(const InitialData& data, Complex z);

struct ScatteringData {
  std::vector<double> z_grid;
  std::vector<Complex> s11, s21, r;
  std::vector<double> r_abs;  // |r| stored once; evolve_scattering preserves it bitwise
  double h11_norm = 0.0;
  bool b0_flag = false;
  int winding = 0;

  void validate() const;
  Complex r_at(double z) const;      // cubic interpolation
  double r_abs_at(double z) const;   // cubic interpolation of |r|
};

// Default spectral grid [-zmax, zmax] with n nodes, dropping the dead zone
// |z| < z_min.
std::vector<double> make_z_grid(double zmax = 4.0, int n = 801,
                                double z_min = 0.05);

// Scattering data over the grid.  Runs check_no_discrete_spectrum first when
// `check_spectrum` is set; enforces the determinant relation on every node.
ScatteringData reflection(const InitialData& data, const std::vector<double>& z_grid,
                          int threads = 0, bool check_spectrum = true);

struct WindingOptions {
  double half_width = 6.0;   // rectangle [-w, w] x [z_min, height]
  double height = 6.0;
  double z_min = 0.05;
  int samples_per_side = 2000;
  int max_refine_depth = 12;
  double phase_jump_limit = 1.5707963267948966;  // pi/2
  int threads = 0;
};

// Argument-principle winding number of s11 over the rectangle.  Returns the
// winding (0 = soliton free); throws SolitonsPresent when positive and
// ContourTooCoarse when adjacent phase jumps stay above the limit after
// refinement.
int check_no_discrete_spectrum(const InitialData& data, const WindingOptions& opt = {});

// Test helper: winding number of an arbitrary function over the same
// rectangle machinery.
int winding_number(const std::vector<Complex>& closed_path_values,
                   double phase_jump_limit);

double sobolev_norm_h11(const ScatteringData& sd);

// Time evolution of the reflection coefficient: r(z; t) = r(z; 0)
// exp(i * kScatteringPhaseSign * alpha t / (2 z)); s11 and |r| unchanged.
// The sign is fixed empirically against the PDE solver (see tests).
inline constexpr double kScatteringPhaseSign = -1.0;
ScatteringData evolve_scattering(const ScatteringData& sd, double t,
                                 const ModelParameters& params);

}  // namespace abtk
