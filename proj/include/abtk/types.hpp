#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "abtk/errors.hpp"

namespace abtk {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

inline Complex iu(double y = 1.0) { return Complex(0.0, y); }

// 2-vectors and 2x2 complex matrices, row major.
using Vec2 = std::array<Complex, 2>;
using Mat2 = std::array<Complex, 4>;

inline Mat2 mat2_identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline Complex det2(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat2_inv(const Mat2& m) {
  const Complex d = det2(m);
  return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

inline double mat2_max_abs(const Mat2& m) {
  double v = 0.0;
  for (const auto& e : m) v = std::max(v, std::abs(e));
  return v;
}

// Complex samples on a strictly increasing real grid.  The grid does not
// have to be uniform (spectral grids carry a gap around z = 0).
struct SampledFunction {
  std::vector<double> grid;
  std::vector<Complex> values;

  SampledFunction() = default;
  SampledFunction(std::vector<double> g, std::vector<Complex> v)
      : grid(std::move(g)), values(std::move(v)) {
    validate();
  }

  void validate() const {
    if (grid.size() < 2) throw InvalidInput("SampledFunction: grid needs at least 2 nodes");
    if (grid.size() != values.size())
      throw InvalidInput("SampledFunction: grid/value length mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
      if (!(grid[i] > grid[i - 1]))
        throw InvalidInput("SampledFunction: grid must be strictly increasing");
  }

  std::size_t size() const { return grid.size(); }
  double front() const { return grid.front(); }
  double back() const { return grid.back(); }

  // Piecewise-linear interpolation; clamps outside the grid.
  Complex interp(double x) const {
    if (x <= grid.front()) return values.front();
    if (x >= grid.back()) return values.back();
    std::size_t lo = 0, hi = grid.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (grid[mid] <= x ? lo : hi) = mid;
    }
    const double w = (x - grid[lo]) / (grid[lo + 1] - grid[lo]);
    return values[lo] * (1.0 - w) + values[lo + 1] * w;
  }
};

struct QuadratureSpec {
  enum class Rule { Trapezoid, CompositeGauss };
  Rule rule = Rule::CompositeGauss;
  int refinement = 4;
  // Half-width excluded around a principal-value pole; 0 selects two local
  // grid steps at evaluation time.
  double pv_window = 0.0;

  void validate() const {
    if (refinement < 1) throw InvalidInput("QuadratureSpec: refinement must be >= 1");
    if (pv_window < 0.0) throw InvalidInput("QuadratureSpec: pv_window must be >= 0");
  }
};

}  // namespace abtk
