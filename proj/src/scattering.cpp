#include "abtk/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "abtk/parallel.hpp"
#include "abtk/quadrature.hpp"
#include "abtk/tolerances.hpp"

namespace abtk {

void ModelParameters::validate() const {
  if (alpha == 0.0) throw InvalidInput("ModelParameters: alpha must be nonzero");
  if (std::abs(beta * gamma + 1.0) > tol::kBetaGammaTol)
    throw InvalidInput("ModelParameters: beta*gamma must equal -1");
}

void InitialData::validate() const {
  if (x_grid.size() < 256) throw InvalidInput("InitialData: need n >= 256 nodes");
  if (A0.size() != x_grid.size() || B0.size() != x_grid.size())
    throw InvalidInput("InitialData: sample/grid length mismatch");
  const double h = x_grid[1] - x_grid[0];
  for (std::size_t i = 1; i < x_grid.size(); ++i)
    if (std::abs((x_grid[i] - x_grid[i - 1]) - h) > 1e-9 * std::abs(h))
      throw InvalidInput("InitialData: grid must be uniform");
  double peak = 0.0;
  for (const auto& a : A0) peak = std::max(peak, std::abs(a));
  for (const auto& b : B0) peak = std::max(peak, std::abs(b));
  const double edge = std::max({std::abs(A0.front()), std::abs(A0.back()),
                                std::abs(B0.front()), std::abs(B0.back())});
  if (peak > 0.0 && edge > tol::kEndpointDecay)
    throw InvalidInput("InitialData: samples do not decay at the grid endpoints");
}

bool InitialData::b0_nonzero() const {
  for (double b : B0)
    if (b != 0.0) return true;
  return false;
}

namespace {

Complex profile_value(const Profile& p, double x) {
  if (p.name == "zero") return 0.0;
  if (p.name == "sech") return p.amplitude / std::cosh(x);
  if (p.name == "gauss") return p.amplitude * std::exp(-x * x);
  throw InvalidInput("unknown profile '" + p.name + "'");
}

// 4-point Lagrange interpolation on the uniform grid.
Complex interp4(const std::vector<double>& x, const std::vector<Complex>& v, double s) {
  const double h = x[1] - x[0];
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(std::floor((s - x[0]) / h));
  j = std::clamp<std::ptrdiff_t>(j - 1, 0, n - 4);
  const double u = (s - x[static_cast<std::size_t>(j)]) / h;
  const double w0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
  const double w1 = u * (u - 2.0) * (u - 3.0) / 2.0;
  const double w2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
  const double w3 = u * (u - 1.0) * (u - 2.0) / 6.0;
  const std::size_t k = static_cast<std::size_t>(j);
  return w0 * v[k] + w1 * v[k + 1] + w2 * v[k + 2] + w3 * v[k + 3];
}

}  // namespace

Complex InitialData::a_at(double x) const {
  if (profile) {
    const double c = 0.5 * (x_grid.front() + x_grid.back());
    return profile_value(*profile, x - c);
  }
  if (x <= x_grid.front() || x >= x_grid.back())
    return x <= x_grid.front() ? A0.front() : A0.back();
  return interp4(x_grid, A0, x);
}

InitialData make_initial_data(const std::string& profile, double amplitude, double L,
                              int n, double center) {
  InitialData d;
  d.x_grid.resize(n);
  d.A0.resize(n);
  d.B0.assign(n, 0.0);
  const Profile p{profile, amplitude};
  for (int i = 0; i < n; ++i) {
    const double x = -L + 2.0 * L * i / (n - 1);
    d.x_grid[i] = x;
    d.A0[i] = profile_value(p, x - center);
  }
  if (center == 0.0) d.profile = p;  // analytic form only valid when centered
  d.validate();
  return d;
}

namespace {

// Column systems of the oscillation-removed Lax pair, psi_x + i z [sigma3,
// psi] = X psi with X = (i/2) [[0, A], [-conj(A), 0]]:
//   column 1:  u' = (i/2) A v,            v' = 2 i z v - (i/2) conj(A) u
//   column 2:  p' = -2 i z p + (i/2) A q, q' = -(i/2) conj(A) p
struct ColumnOde {
  Complex z;
  int col;
  const InitialData* data;

  Vec2 rhs(double x, const Vec2& y) const {
    const Complex a = data->a_at(x);
    const Complex ia = iu(0.5) * a;
    const Complex iac = iu(0.5) * std::conj(a);
    if (col == 1) return {ia * y[1], 2.0 * iu() * z * y[1] - iac * y[0]};
    return {-2.0 * iu() * z * y[0] + ia * y[1], -iac * y[0]};
  }
};

Vec2 rk4_step(const ColumnOde& ode, double x, double h, const Vec2& y) {
  const Vec2 k1 = ode.rhs(x, y);
  const Vec2 y2{y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]};
  const Vec2 k2 = ode.rhs(x + 0.5 * h, y2);
  const Vec2 y3{y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]};
  const Vec2 k3 = ode.rhs(x + 0.5 * h, y3);
  const Vec2 y4{y[0] + h * k3[0], y[1] + h * k3[1]};
  const Vec2 k4 = ode.rhs(x + h, y4);
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

Vec2 integrate_column(const InitialData& data, Complex z, Side side, int col,
                      double x_ref, int substeps) {
  ColumnOde ode{z, col, &data};
  const double h0 = data.dx() / substeps;
  double x = side == Side::Left ? data.x_grid.front() : data.x_grid.back();
  const double dir = side == Side::Left ? 1.0 : -1.0;
  Vec2 y = col == 1 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  const double span = std::abs(x_ref - x);
  const long nsteps = std::lround(std::ceil(span / h0 - 1e-12));
  int guard = 0;
  for (long i = 0; i < nsteps; ++i) {
    const double remaining = std::abs(x_ref - x);
    const double h = dir * std::min(h0, remaining);
    y = rk4_step(ode, x, h, y);
    x += h;
    if (++guard >= 64) {
      guard = 0;
      if (std::abs(y[0]) + std::abs(y[1]) > tol::kBlowUpNorm)
        throw BlowUp("jost column norm exceeded 1e8 (wrong half-plane or bad data)");
    }
  }
  if (std::abs(y[0]) + std::abs(y[1]) > tol::kBlowUpNorm)
    throw BlowUp("jost column norm exceeded 1e8 (wrong half-plane or bad data)");
  return y;
}

}  // namespace

Vec2 jost_column(const InitialData& data, Complex z, Side side, int col, double x_ref,
                 int substeps) {
  data.validate();
  if (col != 1 && col != 2) throw InvalidInput("jost_column: col must be 1 or 2");
  return integrate_column(data, z, side, col, x_ref, substeps);
}

JostPair jost_solve(const InitialData& data, Complex z, double x_ref, int substeps) {
  data.validate();
  JostPair jp;
  jp.z = z;
  jp.psi_minus_col1 = integrate_column(data, z, Side::Left, 1, x_ref, substeps);
  jp.psi_minus_col2 = integrate_column(data, z, Side::Left, 2, x_ref, substeps);
  jp.psi_plus_col1 = integrate_column(data, z, Side::Right, 1, x_ref, substeps);
  jp.psi_plus_col2 = integrate_column(data, z, Side::Right, 2, x_ref, substeps);
  return jp;
}

std::pair<Complex, Complex> scattering_coefficients(const InitialData& data, double z,
                                                    double x_ref, int substeps) {
  if (std::abs(z) < tol::kDeadZone)
    throw InvalidInput("scattering_coefficients: |z| inside the dead zone");
  const Vec2 m1 = integrate_column(data, z, Side::Left, 1, x_ref, substeps);
  const Vec2 p1 = integrate_column(data, z, Side::Right, 1, x_ref, substeps);
  const Vec2 p2 = integrate_column(data, z, Side::Right, 2, x_ref, substeps);
  const Complex s11 = m1[0] * p2[1] - m1[1] * p2[0];
  const Complex det21 = p1[0] * m1[1] - p1[1] * m1[0];
  const Complex s21 = std::exp(-2.0 * iu() * z * x_ref) * det21;
  return {s11, s21};
}

Complex s11_upper(const InitialData& data, Complex z) {
  if (z.imag() < 0.0) throw InvalidInput("s11_upper: Im z must be >= 0");
  const Vec2 m1 = integrate_column(data, z, Side::Left, 1, 0.0, 1);
  const Vec2 p2 = integrate_column(data, z, Side::Right, 2, 0.0, 1);
  return m1[0] * p2[1] - m1[1] * p2[0];
}

void ScatteringData::validate() const {
  if (z_grid.size() < 2) throw InvalidInput("ScatteringData: grid too small");
  if (s11.size() != z_grid.size() || s21.size() != z_grid.size() ||
      r.size() != z_grid.size() || r_abs.size() != z_grid.size())
    throw InvalidInput("ScatteringData: column length mismatch");
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double defect =
        std::abs(std::norm(s11[i]) - std::norm(s21[i]) - 1.0);
    if (defect > tol::kUnitarityTol)
      throw UnitarityViolation("determinant relation fails at z = " +
                               std::to_string(z_grid[i]));
    if (r_abs[i] >= 1.0)
      throw UnitarityViolation("|r| >= 1 at z = " + std::to_string(z_grid[i]));
  }
}

namespace {

// Cubic interpolation on the (possibly gapped) spectral grid.
Complex interp_cubic_grid(const std::vector<double>& x, const std::vector<Complex>& v,
                          double s) {
  if (s <= x.front() || s >= x.back())
    throw InvalidInput("interpolation point outside the spectral grid");
  auto it = std::upper_bound(x.begin(), x.end(), s);
  std::ptrdiff_t j = (it - x.begin()) - 1;
  j = std::clamp<std::ptrdiff_t>(j - 1, 0, static_cast<std::ptrdiff_t>(x.size()) - 4);
  const std::size_t k = static_cast<std::size_t>(j);
  Complex acc = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    double w = 1.0;
    for (std::size_t b = 0; b < 4; ++b)
      if (a != b) w *= (s - x[k + b]) / (x[k + a] - x[k + b]);
    acc += w * v[k + a];
  }
  return acc;
}

}  // namespace

Complex ScatteringData::r_at(double z) const { return interp_cubic_grid(z_grid, r, z); }

double ScatteringData::r_abs_at(double z) const {
  std::vector<Complex> tmp(r_abs.begin(), r_abs.end());
  return interp_cubic_grid(z_grid, tmp, z).real();
}

std::vector<double> make_z_grid(double zmax, int n, double z_min) {
  std::vector<double> g;
  g.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double z = -zmax + 2.0 * zmax * i / (n - 1);
    if (std::abs(z) < z_min) continue;
    g.push_back(z);
  }
  return g;
}

ScatteringData reflection(const InitialData& data, const std::vector<double>& z_grid,
                          int threads, bool check_spectrum) {
  data.validate();
  int winding = 0;
  if (check_spectrum) {
    WindingOptions opt;
    opt.threads = threads;
    winding = check_no_discrete_spectrum(data, opt);
  }
  ScatteringData sd;
  sd.winding = winding;
  sd.z_grid = z_grid;
  sd.s11.resize(z_grid.size());
  sd.s21.resize(z_grid.size());
  sd.r.resize(z_grid.size());
  sd.r_abs.resize(z_grid.size());
  sd.b0_flag = data.b0_nonzero();
  parallel_for(z_grid.size(), threads, [&](std::size_t i) {
    const auto [s11, s21] = scattering_coefficients(data, z_grid[i]);
    sd.s11[i] = s11;
    sd.s21[i] = s21;
    sd.r[i] = s21 / s11;
    sd.r_abs[i] = std::abs(sd.r[i]);
  });
  sd.validate();
  sd.h11_norm = sobolev_norm_h11(sd);
  return sd;
}

int winding_number(const std::vector<Complex>& path, double phase_jump_limit) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double d = std::arg(path[i + 1] / path[i]);
    if (std::abs(d) > phase_jump_limit)
      throw ContourTooCoarse("phase jump " + std::to_string(d) +
                             " exceeds the limit between contour samples");
    total += d;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

namespace {

std::vector<Complex> rectangle_path(double w, double lo, double hi, int per_side) {
  std::vector<Complex> pts;
  pts.reserve(4 * per_side + 1);
  for (int i = 0; i < per_side; ++i)  // bottom, left -> right
    pts.emplace_back(-w + 2.0 * w * i / per_side, lo);
  for (int i = 0; i < per_side; ++i)  // right side, up
    pts.emplace_back(w, lo + (hi - lo) * i / per_side);
  for (int i = 0; i < per_side; ++i)  // top, right -> left
    pts.emplace_back(w - 2.0 * w * i / per_side, hi);
  for (int i = 0; i < per_side; ++i)  // left side, down
    pts.emplace_back(-w, hi - (hi - lo) * i / per_side);
  pts.push_back(pts.front());
  return pts;
}

}  // namespace

int check_no_discrete_spectrum(const InitialData& data, const WindingOptions& opt) {
  data.validate();
  auto eval_path = [&](int per_side) {
    const auto pts =
        rectangle_path(opt.half_width, opt.z_min, opt.height, per_side);
    std::vector<Complex> vals(pts.size());
    parallel_for(pts.size(), opt.threads,
                 [&](std::size_t i) { vals[i] = s11_upper(data, pts[i]); });
    return vals;
  };
  int per_side = opt.samples_per_side;
  for (int depth = 0; depth <= opt.max_refine_depth; ++depth) {
    try {
      const int w = winding_number(eval_path(per_side), opt.phase_jump_limit);
      if (w > 0)
        throw SolitonsPresent("winding number " + std::to_string(w) +
                              " indicates discrete spectrum");
      return w;
    } catch (const ContourTooCoarse&) {
      if (depth == opt.max_refine_depth) throw;
      per_side *= 2;
    }
  }
  throw ContourTooCoarse("contour refinement exhausted");
}

double sobolev_norm_h11(const ScatteringData& sd) {
  const auto& z = sd.z_grid;
  const std::size_t n = z.size();
  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex dr;
    if (i == 0)
      dr = (sd.r[1] - sd.r[0]) / (z[1] - z[0]);
    else if (i == n - 1)
      dr = (sd.r[n - 1] - sd.r[n - 2]) / (z[n - 1] - z[n - 2]);
    else
      dr = (sd.r[i + 1] - sd.r[i - 1]) / (z[i + 1] - z[i - 1]);
    integrand[i] = (1.0 + z[i] * z[i]) * (std::norm(sd.r[i]) + std::norm(dr));
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    acc += 0.5 * (z[i] - z[i - 1]) * (integrand[i] + integrand[i - 1]);
  return acc;
}

ScatteringData evolve_scattering(const ScatteringData& sd, double t,
                                 const ModelParameters& params) {
  params.validate();
  ScatteringData out = sd;
  for (std::size_t i = 0; i < sd.z_grid.size(); ++i) {
    const double phase =
        kScatteringPhaseSign * params.alpha * t / (2.0 * sd.z_grid[i]);
    out.r[i] = sd.r[i] * std::polar(1.0, phase);
    out.r_abs[i] = sd.r_abs[i];  // modulus carried over bit-identically
  }
  return out;
}

}  // namespace abtk
