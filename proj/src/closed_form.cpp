#include "qosc/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qosc/elliptic.hpp"

namespace qosc {

namespace {

constexpr double kPi = std::numbers::pi;

// Guarded Newton polish on the monic cubic y^3 + B y^2 + C y + D. The
// trigonometric roots lose absolute accuracy when lambda -> 0 makes the
// coefficients huge, so iterate until the residual stops improving.
double polish_root(double y, double B, double C, double D) {
  double f = ((y + B) * y + C) * y + D;
  for (int it = 0; it < 8; ++it) {
    const double df = (3.0 * y + 2.0 * B) * y + C;
    const double scale = 3.0 * y * y + 2.0 * std::abs(B * y) + std::abs(C);
    if (std::abs(df) <= 1e-8 * scale) return y;  // near-double root: leave as is
    const double yn = y - f / df;
    const double fn = ((yn + B) * yn + C) * yn + D;
    if (!(std::abs(fn) < std::abs(f))) return y;
    y = yn;
    f = fn;
  }
  return y;
}

}  // namespace

CubicRoots turning_points(const OscillatorParams& params, double epsilon) {
  if (!(params.lambda > 0.0))
    throw validation_error(
        "turning_points requires lambda > 0; use harmonic_trajectory for lambda = 0");
  if (!std::isfinite(epsilon)) throw validation_error("epsilon must be finite");

  const VacuumSolution vac = solve_gap_equation(params);
  const double slack = 1e-12 * std::max(1.0, std::abs(vac.epsilon_min));
  if (epsilon < vac.epsilon_min - slack)
    throw validation_error("energy below Gaussian floor");
  epsilon = std::max(epsilon, vac.epsilon_min);

  const double s = 1.5 * params.lambda;
  const double B = params.omega * params.omega / s;
  const double C = -2.0 * epsilon / s;
  const double D = 0.25 / s;

  // Trigonometric three-real-root form; eps >= eps_min guarantees reality,
  // rounding can push the acos argument marginally past 1 at degeneracy.
  const double Q = (B * B - 3.0 * C) / 9.0;
  const double R = (2.0 * B * B * B - 9.0 * B * C + 27.0 * D) / 54.0;
  const double arg = std::clamp(R / std::sqrt(Q * Q * Q), -1.0, 1.0);
  const double theta = std::acos(arg);
  const double f = -2.0 * std::sqrt(Q);
  double r0 = polish_root(f * std::cos(theta / 3.0) - B / 3.0, B, C, D);
  double r1 = polish_root(f * std::cos((theta + 2.0 * kPi) / 3.0) - B / 3.0, B, C, D);
  double r2 = polish_root(f * std::cos((theta - 2.0 * kPi) / 3.0) - B / 3.0, B, C, D);

  if (r0 > r1) std::swap(r0, r1);
  if (r1 > r2) std::swap(r1, r2);
  if (r0 > r1) std::swap(r0, r1);
  if (!(r0 < 0.0) || !(r1 > 0.0))
    throw numerical_error("cubic root structure invalid (expected y3 < 0 < y1 <= y2)");

  return {r1, r2, r0, s};
}

EllipticTrajectory make_trajectory(const OscillatorParams& params, double epsilon) {
  EllipticTrajectory traj;
  traj.roots = turning_points(params, epsilon);
  const CubicRoots& r = traj.roots;
  traj.phi0 = 0.0;
  traj.degenerate = (r.y2 - r.y1) < 1e-10 * r.y2;
  if (traj.degenerate) {
    traj.modulus_p = 0.0;
    traj.rate = std::sqrt(r.lam_scale * (r.y2 - r.y3));
    return traj;
  }
  traj.modulus_p = std::sqrt((r.y2 - r.y1) / (r.y2 - r.y3));
  traj.rate = std::sqrt(r.lam_scale * (r.y2 - r.y3));
  return traj;
}

double chi_squared_at(const EllipticTrajectory& traj, double t) {
  const CubicRoots& r = traj.roots;
  if (traj.degenerate) return 0.5 * (r.y1 + r.y2);
  const double u = traj.rate * (t + 0.5 * traj.phi0);
  const double s = jacobi_elliptic(u, traj.modulus_p).sn;
  const double s2 = s * s;
  const double num = r.y1 * (r.y2 - r.y3) - r.y3 * (r.y2 - r.y1) * s2;
  const double den = (r.y2 - r.y3) - (r.y2 - r.y1) * s2;
  return num / den;
}

WidthState width_state_at(const EllipticTrajectory& traj, double t) {
  const CubicRoots& r = traj.roots;
  if (traj.degenerate) return WidthState(std::sqrt(0.5 * (r.y1 + r.y2)), 0.0);
  const double u = traj.rate * (t + 0.5 * traj.phi0);
  const JacobiElliptic j = jacobi_elliptic(u, traj.modulus_p);
  const double s2 = j.sn * j.sn;
  const double num = r.y1 * (r.y2 - r.y3) - r.y3 * (r.y2 - r.y1) * s2;
  const double den = (r.y2 - r.y3) - (r.y2 - r.y1) * s2;
  const double y = num / den;
  const double dy = 2.0 * traj.rate * j.sn * j.cn * j.dn * (r.y2 - r.y1) * (r.y2 - r.y3) *
                    (r.y1 - r.y3) / (den * den);
  const double chi = std::sqrt(y);
  return WidthState(chi, 0.5 * dy / chi);
}

double harmonic_trajectory(const OscillatorParams& params, double epsilon, double t) {
  if (params.lambda != 0.0)
    throw validation_error("harmonic_trajectory requires lambda = 0");
  const double w = params.omega;
  if (!(epsilon >= 0.5 * w))
    throw validation_error("energy below harmonic vacuum");
  const double mean = epsilon / (w * w);
  const double amp =
      mean * std::sqrt(std::max(0.0, 1.0 - w * w / (4.0 * epsilon * epsilon)));
  return mean + amp * std::cos(2.0 * w * t);
}

double period(const EllipticTrajectory& traj) {
  if (traj.degenerate)
    throw validation_error("stationary state, period undefined");
  return 2.0 * complete_elliptic_K(traj.modulus_p) / traj.rate;
}

}  // namespace qosc
