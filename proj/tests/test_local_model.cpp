#include <doctest.h>

#include <cmath>

#include "abtk/local_model.hpp"
#include "abtk/phase.hpp"
#include "abtk/special_functions.hpp"

using namespace abtk;

namespace {

Mat2 jump_of(Complex rho) {
  return {1.0 - std::norm(rho), -std::conj(rho), rho, 1.0};
}

double max_entry_diff(const Mat2& a, const Mat2& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

// The connection matrix N_-^{-1} N_+ of the model solution must reproduce the
// constant jump [[1-|rho|^2, -conj(rho)], [rho, 1]].  This is the arbiter for
// the sign conventions of the printed parabolic-cylinder entries (several of
// which are typo-ridden); the implementation passes with:
//   - order  a = i nu entries rotated by e^{-3 i pi/4} (upper) / e^{i pi/4}
//     (lower), order -a entries by e^{-i pi/4} / e^{3 i pi/4},
//   - beta12 = -sqrt(2 pi) e^{-pi nu/2} e^{+i pi/4} / (rho Gamma(-i nu)).
TEST_CASE("plus-model jump identity at real k") {
  for (const Complex rho : {Complex(0.6, 0.0), Complex(0.3, 0.4), Complex(-0.5, 0.2)}) {
    const Mat2 v = jump_of(rho);
    for (double k : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      const Mat2 up = pc_model_matrix(rho, Complex(k), +1);
      const Mat2 lo = pc_model_matrix(rho, Complex(k), -1);
      const Mat2 c = mat2_mul(mat2_inv(lo), up);
      CHECK(max_entry_diff(c, v) < 1e-6);
    }
  }
}

TEST_CASE("mirror-model jump identity at real k") {
  for (const Complex rho : {Complex(0.6, 0.0), Complex(0.2, -0.55)}) {
    const Mat2 v = jump_of(rho);
    for (double k : {-2.0, -0.7, 1.0, 2.0}) {
      const Mat2 up = pc_model_matrix_mirror(rho, Complex(k), +1);
      const Mat2 lo = pc_model_matrix_mirror(rho, Complex(k), -1);
      const Mat2 c = mat2_mul(mat2_inv(lo), up);
      CHECK(max_entry_diff(c, v) < 1e-6);
    }
  }
}

TEST_CASE("model determinant is k-independent") {
  const Complex rho(0.6, 0.0);
  const Complex ref = det2(pc_model_matrix(rho, Complex(0.3, 0.8), 0));
  for (double y : {-2.0, -1.0, -0.2, 0.4, 1.5, 2.0}) {
    const Complex d = det2(pc_model_matrix(rho, Complex(0.3, y), 0));
    CHECK(std::abs(d - ref) < 1e-8);
  }
}

TEST_CASE("model asymptotic normalization") {
  // N(k) k^{-i nu sigma3} e^{i k^2/4 sigma3} -> I along a growing UHP arc
  const Complex rho(0.45, 0.35);
  const double nu = -std::log(1.0 - std::norm(rho)) / (2.0 * kPi);
  for (double mag : {8.0, 12.0, 18.0}) {
    const Complex k = std::polar(mag, 0.4);
    const Mat2 n = pc_model_matrix(rho, k, +1);
    const Complex d11 = std::pow(k, iu(nu)) * std::exp(-iu(0.25) * k * k);
    const Complex d22 = 1.0 / d11;
    const Mat2 undressed{n[0] / d11, n[1] / d22, n[2] / d11, n[3] / d22};
    CHECK(max_entry_diff(undressed, mat2_identity()) < 6.0 / mag);
  }
}

TEST_CASE("modulus identity of the model coefficients") {
  for (double rabs : {0.1, 0.45, 0.6, 0.9}) {
    const Complex rho = std::polar(rabs, 0.8);
    const double nu = -std::log(1.0 - rabs * rabs) / (2.0 * kPi);
    CHECK(std::abs(std::norm(model_beta12(rho, nu)) - nu) < 1e-9);
    CHECK(std::abs(std::norm(model_beta12_mirror(rho, nu)) - nu) < 1e-9);
    // mirror coefficient is the conjugate at the conjugate parameter
    CHECK(std::abs(model_beta12_mirror(rho, nu) -
                   std::conj(model_beta12(std::conj(rho), nu))) < 1e-12);
  }
}

TEST_CASE("synthetic spec point: rho = 0.6") {
  const double nu = -std::log(1.0 - 0.36) / (2.0 * kPi);
  CHECK(nu == doctest::Approx(0.07101).epsilon(2e-4));
  CHECK(std::abs(model_beta12(0.6, nu)) == doctest::Approx(std::sqrt(nu)).epsilon(1e-10));
  CHECK(std::abs(model_beta12(0.6, nu)) == doctest::Approx(0.26648).epsilon(2e-4));
}

TEST_CASE("componentwise phase of beta12") {
  const Complex rho(0.3, 0.5);
  const double nu = -std::log(1.0 - std::norm(rho)) / (2.0 * kPi);
  const Complex b = model_beta12(rho, nu);
  // arg beta = pi (minus sign) + pi/4 - arg rho - arg Gamma(-i nu)
  double expected = kPi + 0.25 * kPi - std::arg(rho) - std::arg(complex_gamma(-iu(nu)));
  double diff = std::remainder(std::arg(b) - expected, 2.0 * kPi);
  CHECK(std::abs(diff) < 1e-10);
}

TEST_CASE("n_matrix surfaces and the residue link") {
  // a tiny hand-made model, bypassing the scattering pipeline
  LocalModel lm;
  lm.z0 = 1.0;
  lm.r_plus = 0.6;
  lm.r_minus = -0.6;
  lm.nu_plus = lm.nu_minus = -std::log(1.0 - 0.36) / (2.0 * kPi);
  lm.a1 = iu(lm.nu_plus);
  lm.a2 = iu(lm.nu_minus);
  lm.delta0_plus = lm.delta0_minus = 1.0;
  lm.beta12_plus = model_beta12(lm.r_plus, lm.nu_plus);
  lm.beta21_plus = lm.nu_plus / lm.beta12_plus;
  lm.beta12_minus = model_beta12_mirror(lm.r_minus, lm.nu_minus);
  lm.beta21_minus = lm.nu_minus / lm.beta12_minus;

  CHECK(std::abs(lm.beta12_plus * lm.beta21_plus - Complex(lm.nu_plus)) < 1e-14);

  const auto [m_plus_12, m_minus_12, m11] = mtilde1_from_beta(lm);
  CHECK(m11 == Complex(0.0));
  CHECK(std::abs(m_plus_12 - iu() * lm.beta12_plus) == 0.0);
  CHECK(std::abs(m_minus_12 + iu() * lm.beta12_minus) == 0.0);

  CHECK_NOTHROW(n_matrix(+1, Complex(1.0, 0.5), lm));
  CHECK_NOTHROW(n_matrix(-1, Complex(-0.5, -0.7), lm));
  CHECK_THROWS_AS(n_matrix(+1, Complex(1.0, 0.0), lm), InvalidInput);
  CHECK_THROWS_AS(n_matrix(+1, Complex(30.0, 1.0), lm), RangeError);
}

TEST_CASE("first moment of the model matches the coefficient") {
  // numeric 1/k coefficient of N k^{-i nu sigma3} e^{i k^2/4 sigma3} vs the
  // beta12 residue link ((Phi_1)_{12} = i beta12 for the plus model)
  const Complex rho(0.6, 0.0);
  const double nu = -std::log(1.0 - std::norm(rho)) / (2.0 * kPi);
  const Complex b = model_beta12(rho, nu);
  for (double mag : {10.0, 14.0, 18.0}) {
    const Complex k = std::polar(mag, 0.3);
    const Mat2 n = pc_model_matrix(rho, k, +1);
    const Complex d11 = std::pow(k, iu(nu)) * std::exp(-iu(0.25) * k * k);
    // (1,2) entry of (N e^{+i k^2/4 sigma3} k^{-i nu sigma3} - I) * k
    const Complex moment12 = n[1] / (1.0 / d11) * k;
    CHECK(std::abs(moment12 - iu() * b) < 8.0 / mag);
  }
}
