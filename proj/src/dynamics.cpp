#include "qosc/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace qosc {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> uniform_grid(double t0, double t1, int n) {
  if (n < 2) throw validation_error("n_samples must be at least 2");
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    ts[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
  ts.back() = t1;
  return ts;
}

}  // namespace

complexd wronskian(const ModeFunction& mode) {
  return std::conj(mode.u_dot) * mode.u - std::conj(mode.u) * mode.u_dot;
}

ModeFunction vacuum_mode_harmonic(const OscillatorParams& params, double t) {
  const double w = params.omega;
  const complexd u = std::polar(1.0 / std::sqrt(2.0 * w), -w * t);
  return {u, complexd(0.0, -w) * u, t};
}

std::vector<WidthSample> integrate_width(const OscillatorParams& params,
                                         const WidthState& initial, double t0, double t1,
                                         int n_samples, const IntegratorConfig& config) {
  const double w2 = params.omega * params.omega;
  const double lam = params.lambda;
  OdeRhs<2> rhs = [w2, lam](double, const std::array<double, 2>& y,
                            std::array<double, 2>& dy) {
    const double chi = y[0];
    if (!(chi > 0.0)) return false;
    const double chi3 = chi * chi * chi;
    dy[0] = y[1];
    dy[1] = -w2 * chi - 3.0 * lam * chi3 + 0.25 / chi3;
    return true;
  };

  std::vector<WidthSample> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  integrate_dense<2>(
      rhs, {initial.chi, initial.chi_dot}, t0, t1, uniform_grid(t0, t1, n_samples),
      [&out](double t, const std::array<double, 2>& y) {
        out.push_back({t, WidthState(y[0], y[1])});
      },
      config);
  return out;
}

std::vector<ModeSample> integrate_meanfield(const OscillatorParams& params,
                                            const ModeFunction& initial, double t0,
                                            double t1, int n_samples,
                                            const IntegratorConfig& config) {
  if (std::abs(wronskian(initial) - complexd(0.0, 1.0)) > 1e-8)
    throw validation_error("initial mode must satisfy the Wronskian condition W = i");

  const double w2 = params.omega * params.omega;
  const double lam = params.lambda;
  // state = (Re v, Im v, Re v_dot, Im v_dot)
  OdeRhs<4> rhs = [w2, lam](double, const std::array<double, 4>& y,
                            std::array<double, 4>& dy) {
    const double vv = y[0] * y[0] + y[1] * y[1];
    const double f = -(w2 + 3.0 * lam * vv);
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = f * y[0];
    dy[3] = f * y[1];
    return true;
  };

  std::vector<ModeSample> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  integrate_dense<4>(
      rhs, {initial.u.real(), initial.u.imag(), initial.u_dot.real(), initial.u_dot.imag()},
      t0, t1, uniform_grid(t0, t1, n_samples),
      [&out](double t, const std::array<double, 4>& y) {
        out.push_back({t, ModeFunction{complexd(y[0], y[1]), complexd(y[2], y[3]), t}});
      },
      config);
  return out;
}

double meanfield_residual(const OscillatorParams& params, double r, int n_samples) {
  if (n_samples < 2) throw validation_error("n_samples must be at least 2");
  const double wg = gap_frequency(params.omega, params.lambda);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double w2 = params.omega * params.omega;
  const double span = kPi / wg;  // one full period of |v_r|^2
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = span * static_cast<double>(i) / (n_samples - 1);
    const complexd v0 = std::polar(1.0 / std::sqrt(2.0 * wg), -wg * t);
    const complexd vr = ch * v0 + sh * std::conj(v0);
    // v0 solves the linear gap equation, so v_r_ddot = -Omega_G^2 v_r exactly
    const complexd res = (w2 - wg * wg + 3.0 * params.lambda * std::norm(vr)) * vr;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

}  // namespace qosc
