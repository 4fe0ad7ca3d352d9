#include <doctest.h>

#include <cmath>

#include "abtk/quadrature.hpp"

using namespace abtk;

namespace {

SampledFunction constant_on(double lo, double hi, int n, Complex value) {
  std::vector<double> g(n);
  std::vector<Complex> v(n, value);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return SampledFunction(std::move(g), std::move(v));
}

SampledFunction sampled(double lo, double hi, int n, Complex (*f)(double)) {
  std::vector<double> g(n);
  std::vector<Complex> v(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * i / (n - 1);
    v[i] = f(g[i]);
  }
  return SampledFunction(std::move(g), std::move(v));
}

}  // namespace

TEST_CASE("cauchy integral closed form for constant density") {
  const SampledFunction f = constant_on(-1.0, 1.0, 401, 1.0);
  const Complex z(0.0, 2.0);
  QuadratureSpec spec;
  spec.refinement = 8;
  const Complex expected = std::log((2.0 * iu() - 1.0) / (2.0 * iu() + 1.0));
  CHECK(std::abs(cauchy_integral(f, z, spec) - expected) < 1e-10);
}

TEST_CASE("cauchy integral of zero is zero") {
  const SampledFunction f = constant_on(-1.0, 1.0, 64, 0.0);
  CHECK(std::abs(cauchy_integral(f, Complex(0.3, 1.0), {})) == 0.0);
}

TEST_CASE("cauchy integral self-convergence under refinement doubling") {
  auto smooth = [](double s) { return Complex(std::exp(-s * s), 0.1 * s); };
  const SampledFunction f = sampled(-2.0, 2.0, 801, smooth);
  {
    QuadratureSpec a{QuadratureSpec::Rule::Trapezoid, 16, 0.0};
    QuadratureSpec b{QuadratureSpec::Rule::Trapezoid, 32, 0.0};
    const Complex za(0.7, 0.9);
    CHECK(std::abs(cauchy_integral(f, za, a) - cauchy_integral(f, za, b)) < 1e-8);
  }
  {
    QuadratureSpec a{QuadratureSpec::Rule::CompositeGauss, 4, 0.0};
    QuadratureSpec b{QuadratureSpec::Rule::CompositeGauss, 8, 0.0};
    const Complex za(0.7, 0.9);
    CHECK(std::abs(cauchy_integral(f, za, a) - cauchy_integral(f, za, b)) < 1e-8);
  }
}

TEST_CASE("cauchy integral vs brute-force trapezoid oracle") {
  // independent dense-trapezoid evaluation of the same linear interpolant
  auto smooth = [](double s) { return Complex(1.0 / (1.0 + s * s), s); };
  const SampledFunction f = sampled(-1.5, 1.5, 301, smooth);
  const Complex z(2.0, 0.7);
  Complex oracle = 0.0;
  const int m = 400000;
  for (int i = 0; i < m; ++i) {
    const double s0 = -1.5 + 3.0 * i / m, s1 = -1.5 + 3.0 * (i + 1) / m;
    oracle += 0.5 * (s1 - s0) * (f.interp(s0) / (s0 - z) + f.interp(s1) / (s1 - z));
  }
  QuadratureSpec spec;
  spec.refinement = 8;
  CHECK(std::abs(cauchy_integral(f, z, spec) - oracle) < 1e-8);
}

TEST_CASE("cauchy integral is linear in the density") {
  auto f1 = sampled(-1.0, 1.0, 201, [](double s) { return Complex(s * s, -s); });
  auto f2 = sampled(-1.0, 1.0, 201, [](double s) { return Complex(std::cos(s), 0.3); });
  std::vector<Complex> combo(201);
  const Complex c1(0.7, -0.2), c2(-1.3, 0.4);
  for (int i = 0; i < 201; ++i) combo[i] = c1 * f1.values[i] + c2 * f2.values[i];
  const SampledFunction f3(f1.grid, std::move(combo));
  for (const Complex z : {Complex(0.4, 0.8), Complex(-2.5, 0.0), Complex(0.2105, 0.0)}) {
    QuadratureSpec spec;
    const Complex lhs = cauchy_integral(f3, z, spec);
    const Complex rhs = c1 * cauchy_integral(f1, z, spec) + c2 * cauchy_integral(f2, z, spec);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("principal value quadrature against analytic value") {
  // f(s) = s on [-1,1]:  PV int s/(s-x) ds = 2 + x log((1-x)/(1+x))
  const SampledFunction f = sampled(-1.0, 1.0, 1601, [](double s) { return Complex(s); });
  for (double x : {0.300001, -0.4370001, 0.0001}) {
    QuadratureSpec spec;
    spec.refinement = 8;
    const double expected = 2.0 + x * std::log((1.0 - x) / (1.0 + x));
    CHECK(std::abs(cauchy_integral(f, Complex(x), spec) - expected) < 2e-6);
  }
}

TEST_CASE("principal value pole on a node raises") {
  const SampledFunction f = constant_on(-1.0, 1.0, 101, 1.0);
  CHECK_THROWS_AS(cauchy_integral(f, Complex(f.grid[50]), {}), PoleOnNode);
}

TEST_CASE("cumulative integral basics") {
  const SampledFunction zero = constant_on(0.0, 1.0, 11, 0.0);
  const SampledFunction F0 = cumulative_integral(zero);
  for (const auto& v : F0.values) CHECK(std::abs(v) == 0.0);

  const SampledFunction one = constant_on(0.0, 1.0, 11, 1.0);
  const SampledFunction F1 = cumulative_integral(one);
  CHECK(std::abs(F1.values.back() - 1.0) < 1e-15);

  const SampledFunction lin = sampled(0.0, 1.0, 101, [](double s) { return Complex(s); });
  const SampledFunction F2 = cumulative_integral(lin);
  CHECK(std::abs(F2.values.back() - 0.5) < 1e-3);
}

TEST_CASE("cumulative integral then differencing recovers smooth samples") {
  const SampledFunction f = sampled(-3.0, 3.0, 601, [](double s) {
    return Complex(std::sin(s), std::exp(-s * s));
  });
  const SampledFunction F = cumulative_integral(f);
  const double h = f.grid[1] - f.grid[0];
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    const Complex d = (F.values[i + 1] - F.values[i - 1]) / (2.0 * h);
    worst = std::max(worst, std::abs(d - f.values[i]));
  }
  CHECK(worst < 1e-4);  // O(h^2)
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(SampledFunction({1.0}, {Complex(1.0)}), InvalidInput);
  CHECK_THROWS_AS(SampledFunction({0.0, 0.0}, {Complex(1.0), Complex(2.0)}), InvalidInput);
  QuadratureSpec bad;
  bad.refinement = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
}
