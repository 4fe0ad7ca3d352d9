#pragma once

#include "abtk/types.hpp"

namespace abtk {

// integral of f(s)/(s - z) ds over the sample interval of f, with f taken as
// the piecewise-linear interpolant of its samples.
//
// For z off the real interval this is a regular quadrature (rule and panel
// refinement from `spec`).  For real z strictly inside the interval the
// principal value is computed: a symmetric window of half-width pv_window is
// excluded from the panel rule and handled exactly through the odd part of
// the interpolant.  Throws PoleOnNode when z coincides with a sample node in
// PV mode, OnBand-adjacent callers are expected to pick the mode.
Complex cauchy_integral(const SampledFunction& f, Complex z, const QuadratureSpec& spec);

// PV core without the node guard; used by delta_boundary where evaluation at
// the spectral nodes themselves is wanted.
Complex pv_cauchy(const SampledFunction& f, double x, const QuadratureSpec& spec);

// Trapezoid cumulative antiderivative, F(grid[0]) = 0.
SampledFunction cumulative_integral(const SampledFunction& f);

// Plain trapezoid integral of the samples.
Complex integrate_samples(const SampledFunction& f);

}  // namespace abtk
