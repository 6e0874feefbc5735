// Exact width trajectory y(t) = chi^2(t) of the anharmonic Gaussian branch:
// the quadrature of the first integral leads to a cubic in y whose two
// positive roots are the turning points, and inverting the incomplete
// elliptic integral gives y(t) in closed form.

#ifndef QOSC_CLOSED_FORM_HPP
#define QOSC_CLOSED_FORM_HPP

#include "qosc/model.hpp"

namespace qosc {

// Roots of (3 lambda/2) y^3 + omega^2 y^2 - 2 eps y + 1/4 = 0, i.e.
//   2 eps y - omega^2 y^2 - (3 lambda/2) y^3 - 1/4
//     = (3 lambda/2)(y2 - y)(y - y1)(y - y3),
// sorted y3 < 0 < y1 <= y2.
struct CubicRoots {
  double y1;         // lower turning point
  double y2;         // upper turning point
  double y3;         // unphysical negative root
  double lam_scale;  // 3 lambda / 2
};

struct EllipticTrajectory {
  CubicRoots roots;
  double modulus_p;  // sqrt((y2 - y1)/(y2 - y3)), in [0, 1)
  double rate;       // sqrt((3 lambda/2)(y2 - y3))
  double phi0;       // phase constant; 0 here, so y(0) = y1
  bool degenerate;   // y1 == y2 within guard: stationary state, y constant
};

// Requires lambda > 0 and eps >= eps_min; the cubic is solved by the
// trigonometric three-real-root method with a guarded Newton polish.
CubicRoots turning_points(const OscillatorParams& params, double epsilon);

// Trajectory with the kappa = 0 at t = 0 phase convention (y(0) = y1).
// (y2 - y1)/y2 < 1e-10 is reported as a constant trajectory since the
// modulus underflows and the state is stationary.
EllipticTrajectory make_trajectory(const OscillatorParams& params, double epsilon);

// y(t), always inside [y1, y2]: with s = sn(rate (t + phi0/2), p),
//   y = [y1 (y2-y3) - y3 (y2-y1) s^2] / [(y2-y3) - (y2-y1) s^2].
double chi_squared_at(const EllipticTrajectory& traj, double t);

// (chi, chi_dot) at t from the analytic derivative of y(t).
WidthState width_state_at(const EllipticTrajectory& traj, double t);

// Harmonic branch (lambda = 0, eps >= omega/2), phase chosen so y(0) = y_max:
//   y = (eps/omega^2) [1 + sqrt(1 - omega^2/(4 eps^2)) cos(2 omega t)].
double harmonic_trajectory(const OscillatorParams& params, double epsilon, double t);

// Full period of y(t): T = 2 K(p)/rate. Rejects degenerate trajectories.
double period(const EllipticTrajectory& traj);

}  // namespace qosc

#endif
