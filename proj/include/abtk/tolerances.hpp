#pragma once

// Numerical tolerances used at call sites.  Kept in one place so tests and
// production code agree on thresholds.

namespace abtk::tol {

// special functions
inline constexpr double kGammaPoleEps = 1e-14;     // non-positive-integer detection
inline constexpr double kPcTarget = 1e-9;          // parabolic cylinder absolute error
inline constexpr double kSeriesEps = 1e-16;        // power series termination
inline constexpr int kSeriesMaxTerms = 600;

// quadrature
inline constexpr double kPvNodeEps = 1e-12;        // pole-on-node detection (relative)

// direct scattering
inline constexpr double kUnitarityTol = 1e-6;      // | |s11|^2 - |s21|^2 - 1 |
inline constexpr double kBlowUpNorm = 1e8;
inline constexpr double kEndpointDecay = 1e-8;     // initial data decay proxy
inline constexpr double kBetaGammaTol = 1e-14;     // beta*gamma = -1
inline constexpr double kZeroReflection = 1e-13;   // r(z0) treated as zero
inline constexpr double kDeadZone = 0.05;          // spectral dead zone |z| < z_min

// conjugation / phase
inline constexpr double kReflectionUnitTol = 1e-12;  // 1 - |r|^2 lower bound
inline constexpr double kNeutralBand = 1e-14;        // decay_sign neutral width
inline constexpr double kContourTruncation = 8.0;    // ray truncation, units of z0

// evolution
inline constexpr double kStabilityBudget = 0.1;    // dt * max|A|^2
inline constexpr double kEscapeFraction = 1e-4;    // left-edge amplitude ratio
inline constexpr double kEdgeZone = 0.05;          // fraction of domain per edge

}  // namespace abtk::tol
