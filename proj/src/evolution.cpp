#include "abtk/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "abtk/asymptotics.hpp"
#include "abtk/phase.hpp"
#include "abtk/tolerances.hpp"

namespace abtk {

FieldState FieldState::from_initial(const InitialData& data) {
  data.validate();
  return FieldState{data.x_grid, data.A0, data.B0, 0.0};
}

void EvolveConfig::validate(double max_amp) const {
  if (!(dt > 0.0)) throw InvalidInput("EvolveConfig: dt must be positive");
  if (!(fixed_point_tol > 0.0) || fixed_point_max_iter < 1)
    throw InvalidInput("EvolveConfig: bad fixed point settings");
  if (check_stability && dt * max_amp * max_amp > tol::kStabilityBudget)
    throw InvalidInput("EvolveConfig: dt |A|^2 exceeds the stability budget");
}

namespace {

// In-place trapezoid cumulative integral with F(x0) = 0.
template <typename T>
void cumtrap(const std::vector<double>& x, const std::vector<T>& f, std::vector<T>& out) {
  out.resize(f.size());
  out[0] = T{};
  for (std::size_t i = 1; i < f.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
}

RhsResult rhs_of(const std::vector<double>& x, const std::vector<Complex>& A,
                 const std::vector<double>& B_seed, const ModelParameters& params,
                 const EvolveConfig& cfg) {
  const std::size_t n = x.size();
  std::vector<double> B = B_seed;
  std::vector<Complex> At(n), integrand(n), cum(n);
  std::vector<double> breal(n), bnew(n);
  int iters = 0;
  for (; iters < cfg.fixed_point_max_iter; ++iters) {
    for (std::size_t i = 0; i < n; ++i)
      integrand[i] = params.alpha * A[i] + params.beta * A[i] * B[i];
    cumtrap(x, integrand, cum);
    At = cum;
    for (std::size_t i = 0; i < n; ++i)
      breal[i] = (std::conj(A[i]) * At[i]).real();
    std::vector<double> bcum;
    cumtrap(x, breal, bcum);
    double change = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      bnew[i] = -params.gamma * bcum[i];
      change = std::max(change, std::abs(bnew[i] - B[i]));
      scale = std::max(scale, std::abs(bnew[i]));
      B[i] = 0.5 * B[i] + 0.5 * bnew[i];  // damped update
    }
    if (!std::isfinite(change))
      throw FixedPointDivergence("A_t <-> B iteration produced non-finite values");
    if (change <= cfg.fixed_point_tol * std::max(1.0, scale)) {
      // converged; finish with a consistent (A_t, B) pair
      for (std::size_t i = 0; i < n; ++i)
        integrand[i] = params.alpha * A[i] + params.beta * A[i] * bnew[i];
      cumtrap(x, integrand, At);
      return {std::move(At), std::move(bnew), iters + 1};
    }
  }
  throw FixedPointDivergence("A_t <-> B iteration did not converge");
}

}  // namespace

RhsResult rhs(const FieldState& state, const ModelParameters& params,
              const EvolveConfig& cfg) {
  params.validate();
  return rhs_of(state.x, state.A, state.B, params, cfg);
}

FieldState step(const FieldState& state, const ModelParameters& params,
                const EvolveConfig& cfg) {
  const std::size_t n = state.x.size();
  const double h = cfg.dt;
  int iters = 0;
  auto deriv = [&](const std::vector<Complex>& A,
                   const std::vector<double>& B_seed) {
    RhsResult r = rhs_of(state.x, A, B_seed, params, cfg);
    iters = std::max(iters, r.iterations);
    return r;
  };

  const RhsResult k1 = deriv(state.A, state.B);
  std::vector<Complex> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = state.A[i] + 0.5 * h * k1.A_t[i];
  const RhsResult k2 = deriv(tmp, k1.B);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = state.A[i] + 0.5 * h * k2.A_t[i];
  const RhsResult k3 = deriv(tmp, k2.B);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = state.A[i] + h * k3.A_t[i];
  const RhsResult k4 = deriv(tmp, k3.B);

  FieldState out;
  out.x = state.x;
  out.t = state.t + h;
  out.A.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.A[i] = state.A[i] +
               h / 6.0 * (k1.A_t[i] + 2.0 * k2.A_t[i] + 2.0 * k3.A_t[i] + k4.A_t[i]);
  out.B = rhs_of(state.x, out.A, k4.B, params, cfg).B;
  return out;
}

namespace {

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& a : v) m = std::max(m, std::abs(a));
  return m;
}

void check_left_escape(const FieldState& s) {
  const double span = s.x.back() - s.x.front();
  const double edge = s.x.front() + tol::kEdgeZone * span;
  double peak = max_abs(s.A);
  if (peak <= 0.0) return;
  for (std::size_t i = 0; i < s.x.size() && s.x[i] <= edge; ++i)
    if (std::abs(s.A[i]) > tol::kEscapeFraction * peak)
      throw DomainEscape("amplitude reached the inflow (left) edge zone at t = " +
                         std::to_string(s.t));
}

double right_edge_amplitude(const FieldState& s) {
  const double span = s.x.back() - s.x.front();
  const double edge = s.x.back() - tol::kEdgeZone * span;
  double m = 0.0;
  for (std::size_t i = s.x.size(); i-- > 0 && s.x[i] >= edge;)
    m = std::max(m, std::abs(s.A[i]));
  return m;
}

double l2_norm(const FieldState& s) {
  double acc = 0.0;
  for (std::size_t i = 1; i < s.x.size(); ++i)
    acc += 0.5 * (s.x[i] - s.x[i - 1]) *
           (std::norm(s.A[i]) + std::norm(s.A[i - 1]));
  return std::sqrt(acc);
}

}  // namespace

FieldState evolve(const InitialData& data, const ModelParameters& params,
                  const EvolveConfig& cfg, EvolveReport* report,
                  const std::vector<double>& checkpoints, const SnapshotCallback& snap) {
  params.validate();
  FieldState s = FieldState::from_initial(data);
  cfg.validate(max_abs(s.A));
  EvolveReport rep;
  rep.l2_initial = l2_norm(s);
  std::vector<double> marks = checkpoints;
  std::sort(marks.begin(), marks.end());
  std::size_t next_mark = 0;
  long stepno = 0;
  const double eps = 1e-9 * cfg.dt;
  while (s.t < cfg.t_end - eps) {
    s = step(s, params, cfg);
    ++stepno;
    if (cfg.escape_check_every > 0 && stepno % cfg.escape_check_every == 0)
      check_left_escape(s);
    rep.right_edge_amplitude = std::max(rep.right_edge_amplitude, right_edge_amplitude(s));
    while (next_mark < marks.size() && s.t >= marks[next_mark] - eps) {
      if (snap) snap(s);
      ++next_mark;
    }
  }
  check_left_escape(s);
  // final right-boundary compatibility defect: int (alpha A + beta A B) dx
  Complex defect = 0.0;
  for (std::size_t i = 1; i < s.x.size(); ++i) {
    const Complex f1 = params.alpha * s.A[i] + params.beta * s.A[i] * s.B[i];
    const Complex f0 = params.alpha * s.A[i - 1] + params.beta * s.A[i - 1] * s.B[i - 1];
    defect += 0.5 * (s.x[i] - s.x[i - 1]) * (f1 + f0);
  }
  rep.right_boundary_defect = std::abs(defect);
  rep.l2_final = l2_norm(s);
  if (report) *report = rep;
  return s;
}

Complex field_at(const FieldState& state, double x) {
  const auto& xs = state.x;
  if (x <= xs.front() || x >= xs.back())
    throw InvalidInput("field_at: x outside the domain");
  const double h = xs[1] - xs[0];
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(std::floor((x - xs[0]) / h));
  j = std::clamp<std::ptrdiff_t>(j - 1, 0, static_cast<std::ptrdiff_t>(xs.size()) - 4);
  const std::size_t k = static_cast<std::size_t>(j);
  Complex acc = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    double w = 1.0;
    for (std::size_t b = 0; b < 4; ++b)
      if (a != b) w *= (x - xs[k + b]) / (xs[k + a] - xs[k + b]);
    acc += w * state.A[k + a];
  }
  return acc;
}

namespace {

double b_at(const FieldState& state, double x) {
  std::vector<Complex> tmp(state.B.begin(), state.B.end());
  FieldState proxy{state.x, std::move(tmp), {}, state.t};
  return field_at(proxy, x).real();
}

}  // namespace

CompareReport compare_asymptotics(const InitialData& data, const ModelParameters& params,
                                  double ray_z0, const std::vector<double>& t_checkpoints,
                                  const EvolveConfig& cfg, const ScatteringData& sd) {
  if (t_checkpoints.empty()) throw InvalidInput("compare_asymptotics: no checkpoints");
  CompareReport out;
  EvolveConfig run = cfg;
  run.t_end = *std::max_element(t_checkpoints.begin(), t_checkpoints.end());
  auto snap = [&](const FieldState& s) {
    const RayCoordinates ray = RayCoordinates::from_z0(params.alpha, ray_z0, s.t);
    ComparePoint p;
    p.t = s.t;
    p.x_ray = ray.x;
    p.a_numeric = field_at(s, ray.x);
    p.a_leading = evaluate_asymptotics(sd, params.alpha, ray.x, s.t).A_leading;
    p.residual = std::abs(p.a_numeric - p.a_leading);
    p.b_numeric = b_at(s, ray.x);
    out.points.push_back(p);
  };
  evolve(data, params, run, nullptr, t_checkpoints, snap);
  if (out.points.size() >= 2) {
    // least-squares slope of log residual vs log t
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(out.points.size());
    for (const auto& p : out.points) {
      const double lx = std::log(p.t), ly = std::log(std::max(p.residual, 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    out.fitted_decay_exponent = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  const auto& last = out.points.back();
  const double denom = std::abs(last.a_leading);
  out.final_ratio = denom > 0.0 ? std::abs(last.a_numeric) / denom
                                : (std::abs(last.a_numeric) > 0.0 ? 1e300 : 1.0);
  return out;
}

}  // namespace abtk
