#include "abtk/phase.hpp"

#include <cmath>

#include "abtk/tolerances.hpp"

namespace abtk {

RayCoordinates RayCoordinates::make(double alpha, double x, double t) {
  const auto [z0, mz0] = critical_points(alpha, x, t);
  (void)mz0;
  return RayCoordinates{x, t, alpha, z0};
}

RayCoordinates RayCoordinates::from_z0(double alpha, double z0, double t) {
  if (!(z0 > 0.0) || !(t > 0.0))
    throw InvalidInput("RayCoordinates::from_z0: need z0 > 0, t > 0");
  const double x = -alpha * t / (4.0 * z0 * z0);
  return RayCoordinates{x, t, alpha, z0};
}

Complex theta(Complex z, const RayCoordinates& ray) {
  if (z == Complex(0.0)) throw PoleAtZero("theta undefined at z = 0");
  return z * (ray.x / ray.t) - ray.alpha / (4.0 * z);
}

std::pair<double, double> critical_points(double alpha, double x, double t) {
  if (!(t > 0.0)) throw InvalidInput("critical_points: t must be positive");
  if (!(alpha * x < 0.0))
    throw WrongRegime("critical_points: alpha x >= 0 is the decaying regime");
  const double z0 = std::sqrt(-alpha * t / (4.0 * x));
  return {z0, -z0};
}

DecaySign decay_sign(Complex z, const RayCoordinates& ray) {
  if (z.imag() == 0.0) return DecaySign::Neutral;  // real axis is the neutral set
  const Complex e = 2.0 * iu() * ray.t * theta(z, ray);
  if (std::abs(e.real()) < tol::kNeutralBand)
    throw NeutralOnContour("Re(2 i t theta) below the neutral band off the axis");
  return e.real() < 0.0 ? DecaySign::Decays : DecaySign::Grows;
}

JumpMatrix jump_J(double z, const ScatteringData& sd, const RayCoordinates& ray) {
  const Complex r = sd.r_at(z);
  const Complex ph = std::exp(2.0 * iu() * ray.t * theta(Complex(z), ray));
  return {{1.0 - std::norm(r), -std::conj(r) / ph, r * ph, 1.0}, "R", Complex(z)};
}

std::pair<Mat2, Mat2> jump_J1_factors(double z, const ScatteringData& sd,
                                      const DeltaData& dd, const RayCoordinates& ray,
                                      const QuadratureSpec& spec) {
  if (std::abs(std::abs(z) - ray.z0) < 1e-12)
    throw OnCriticalPoint("jump_J1_factors: |z| = z0");
  const Complex r = sd.r_at(z);
  const Complex ph = std::exp(2.0 * iu() * ray.t * theta(Complex(z), ray));
  if (std::abs(z) > ray.z0) {
    const Complex d = delta(Complex(z), dd, spec);
    const Mat2 upper{1.0, -std::conj(r) * d * d / ph, 0.0, 1.0};
    const Mat2 lower{1.0, 0.0, r / (d * d) * ph, 1.0};
    return {upper, lower};
  }
  const auto [dp, dm] = delta_boundary(z, dd, spec);
  const double denom = 1.0 - std::norm(r);
  const Mat2 lower{1.0, 0.0, r / denom / (dm * dm) * ph, 1.0};
  const Mat2 upper{1.0, -std::conj(r) / denom * dp * dp / ph, 0.0, 1.0};
  return {lower, upper};
}

namespace {

struct SegmentGeometry {
  Complex anchor;
  double angle;   // ray angle
  bool finite;    // finite segments run to z0/sqrt(2)
};

SegmentGeometry segment_geometry(Segment seg, const RayCoordinates& ray) {
  const double z0 = ray.z0;
  auto deg = [&](int m, Complex anchor, bool finite) {
    return SegmentGeometry{anchor, (2.0 * m - 1.0) * kPi / 4.0, finite};
  };
  switch (seg) {
    case Segment::S1: return deg(1, Complex(z0), false);
    case Segment::S2: return deg(2, Complex(z0), true);
    case Segment::S3: return deg(3, Complex(z0), true);
    case Segment::S4: return deg(4, Complex(z0), false);
    case Segment::S5: return deg(5, Complex(-z0), true);
    case Segment::S6: return deg(6, Complex(-z0), false);
    case Segment::S7: return deg(7, Complex(-z0), false);
    case Segment::S8: return deg(8, Complex(-z0), true);
    case Segment::S9: return deg(9, Complex(0.0), true);
    case Segment::S10: return deg(10, Complex(0.0), true);
    case Segment::S11: return deg(11, Complex(0.0), true);
    case Segment::S12: return deg(12, Complex(0.0), true);
  }
  throw InvalidInput("segment_geometry: bad segment");
}

}  // namespace

double segment_max_h(Segment seg, const RayCoordinates& ray) {
  const auto g = segment_geometry(seg, ray);
  return g.finite ? ray.z0 / std::sqrt(2.0) : tol::kContourTruncation * ray.z0;
}

ContourPoint contour_point(Segment seg, double h, const RayCoordinates& ray) {
  if (!(h >= 0.0) || h > segment_max_h(seg, ray))
    throw InvalidInput("contour_point: arc parameter outside the segment");
  const auto g = segment_geometry(seg, ray);
  return {g.anchor + std::polar(h, g.angle), seg, h};
}

std::vector<ContourPoint> sample_segment(Segment seg, int n, const RayCoordinates& ray) {
  std::vector<ContourPoint> pts;
  pts.reserve(n);
  const double hmax = segment_max_h(seg, ray);
  for (int i = 1; i <= n; ++i) pts.push_back(contour_point(seg, hmax * i / (n + 1), ray));
  return pts;
}

JumpMatrix jump_J2(const ContourPoint& p, const LocalModel& lm,
                   const RayCoordinates& ray) {
  const double z0 = ray.z0;
  const Complex z = p.z;
  const Complex e2 = std::exp(2.0 * iu() * ray.t * theta(z, ray));
  const double nu_p = lm.nu_plus, nu_m = lm.nu_minus;
  const Complex d0p2 = lm.delta0_plus * lm.delta0_plus;
  const Complex d0m2 = lm.delta0_minus * lm.delta0_minus;
  // Principal-branch phase-point powers; no sampled ray meets the cut.
  auto powp = [&](double expo) { return std::pow(z - z0, iu(expo)); };
  auto powm = [&](double expo) { return std::pow(z + z0, iu(expo)); };

  Complex lower = 0.0, upper = 0.0;
  switch (p.segment) {
    case Segment::S1:
      lower = lm.r_plus / d0p2 * powp(-2.0 * nu_p) * e2;
      break;
    case Segment::S2:
    case Segment::S9:
      upper = -std::conj(lm.r_plus) / (1.0 - std::norm(lm.r_plus)) * d0p2 *
              powp(2.0 * nu_p) / e2;
      break;
    case Segment::S3:
    case Segment::S12:
      lower = -lm.r_plus / (1.0 - std::norm(lm.r_plus)) / d0p2 *
              powp(-2.0 * nu_p) * e2;
      break;
    case Segment::S4:
      upper = std::conj(lm.r_plus) * d0p2 * powp(2.0 * nu_p) / e2;
      break;
    case Segment::S5:
    case Segment::S10:
      upper = -std::conj(lm.r_minus) / (1.0 - std::norm(lm.r_minus)) * d0m2 *
              powm(2.0 * nu_m) / e2;
      break;
    case Segment::S6:
      lower = lm.r_minus / d0m2 * powm(-2.0 * nu_m) * e2;
      break;
    case Segment::S7:
      upper = std::conj(lm.r_minus) * d0m2 * powm(2.0 * nu_m) / e2;
      break;
    case Segment::S8:
    case Segment::S11:
      lower = -lm.r_minus / (1.0 - std::norm(lm.r_minus)) / d0m2 *
              powm(-2.0 * nu_m) * e2;
      break;
  }
  return {{1.0, upper, lower, 1.0}, "Sigma", z};
}

}  // namespace abtk
