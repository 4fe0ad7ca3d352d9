#pragma once

#include "abtk/types.hpp"

namespace abtk {

// Gamma function on the complex plane, Lanczos approximation with the
// 15-term g = 607/128 coefficient set and the reflection formula for
// Re w < 0.5.  Relative accuracy ~1e-13 over the supported window
// |Im w| <= 10, 0 < |Re w| <= 10 (and in practice well beyond).
// Throws PoleError at non-positive integers.
Complex complex_gamma(Complex w);

// Weber parabolic cylinder function D_a(k).
//
// Supported window |a| <= 5, |k| <= 20 (RangeError outside).  Maclaurin
// series in k below the |k| = 6 crossover, asymptotic series beyond, with
// a connection formula when arg k leaves the asymptotic sector.  Absolute
// error <= 1e-9 in the window; NonConvergence when neither representation
// meets that target.
Complex parabolic_cylinder_d(Complex a, Complex k);

// D_a(k) together with d/dk D_a(k) (via D'_a = -(k/2) D_a + a D_{a-1}).
std::pair<Complex, Complex> parabolic_cylinder_d_with_derivative(Complex a, Complex k);

// Kummer confluent hypergeometric M(b, c, x) by direct series.  Exposed for
// the test-side oracles.
Complex kummer_m(Complex b, Complex c, Complex x);

}  // namespace abtk
