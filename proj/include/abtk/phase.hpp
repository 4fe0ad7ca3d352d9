#pragma once

#include "abtk/conjugation.hpp"
#include "abtk/local_model.hpp"
#include "abtk/scattering.hpp"
#include "abtk/types.hpp"

namespace abtk {

// Oscillatory-ray coordinates for the alpha x < 0 regime.
struct RayCoordinates {
  double x = 0.0;
  double t = 0.0;
  double alpha = -1.0;
  double z0 = 0.0;

  static RayCoordinates make(double alpha, double x, double t);
  // x chosen so the phase point sits at the requested z0.
  static RayCoordinates from_z0(double alpha, double z0, double t);
};

// theta(z) = z x/t - alpha/(4z).
Complex theta(Complex z, const RayCoordinates& ray);

// (+z0, -z0) with z0 = sqrt(-alpha t / (4x)); WrongRegime if alpha x > 0.
std::pair<double, double> critical_points(double alpha, double x, double t);

enum class DecaySign { Grows, Decays, Neutral };

// Sign of Re(2 i t theta(z)):  Decays means |e^{2 i t theta}| -> 0.
DecaySign decay_sign(Complex z, const RayCoordinates& ray);

struct JumpMatrix {
  Mat2 m;
  std::string contour;
  Complex z;
};

// Jump of the undeformed RHP on the real axis.
JumpMatrix jump_J(double z, const ScatteringData& sd, const RayCoordinates& ray);

// Triangular factors of the delta-conjugated jump J^(1): (left, right) with
// left*right = J^(1).  Upper-lower for |z| > z0, lower-upper for |z| < z0.
std::pair<Mat2, Mat2> jump_J1_factors(double z, const ScatteringData& sd,
                                      const DeltaData& dd, const RayCoordinates& ray,
                                      const QuadratureSpec& spec = {});

// Deformed contour Sigma^(2): rays from +-z0 and from the origin.
enum class Segment {
  S1, S2, S3, S4,     // anchored at +z0
  S5, S6, S7, S8,     // anchored at -z0
  S9, S10, S11, S12,  // anchored at 0
};

struct ContourPoint {
  Complex z;
  Segment segment;
  double h;  // arc parameter >= 0
};

// Point at arc parameter h on a segment.  Finite segments run h in
// (0, z0/sqrt(2)); the four infinite rays are truncated at 8 z0 for sampling.
ContourPoint contour_point(Segment seg, double h, const RayCoordinates& ray);
double segment_max_h(Segment seg, const RayCoordinates& ray);
std::vector<ContourPoint> sample_segment(Segment seg, int n, const RayCoordinates& ray);

// Jump matrix J^(2) on Sigma^(2), built from the ray-limit boundary values of
// the R_j factors (phase-point anchored power laws).
JumpMatrix jump_J2(const ContourPoint& p, const LocalModel& lm,
                   const RayCoordinates& ray);

}  // namespace abtk
