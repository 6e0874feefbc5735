// The energy <-> squeeze-parameter dictionary: exact for the harmonic
// oscillator, perturbative to first order in lambda for the anharmonic one,
// plus the grid-scan witness that no constant squeeze reproduces the exact
// strong-coupling width trajectory.

#ifndef QOSC_BOGOLIUBOV_HPP
#define QOSC_BOGOLIUBOV_HPP

#include <optional>

#include "qosc/closed_form.hpp"
#include "qosc/dynamics.hpp"

namespace qosc {

struct SqueezeParams {
  double r;
  double cosh_r;
  double sinh_r;
  double omega_eff;
};

// cosh r = sqrt(eps/omega + 1/2), sinh r = sqrt(eps/omega - 1/2); requires
// eps >= omega/2. cosh^2 - sinh^2 = 1 exactly on this branch.
SqueezeParams harmonic_squeeze_from_energy(double omega, double epsilon);

// cosh(r) mode + sinh(r) conj(mode); preserves the Wronskian exactly
// (bilinearity gives (cosh^2 - sinh^2) i).
ModeFunction apply_bogoliubov(const ModeFunction& mode, double r);

// Printed first-order roots. y3 diverges as -2 omega^2/(3 lambda) and is
// reported absent at lambda = 0 rather than as an overflow value.
struct WeakCouplingRoots {
  double y1;
  double y2;
  std::optional<double> y3;
};

// Requires eps > omega/2 strictly (the expansion is singular at the vacuum).
WeakCouplingRoots weak_coupling_roots(double omega, double lambda, double epsilon);

// Omega = omega + (3 lambda/(4 omega)) [2 eps/omega^2 + sqrt(1 - omega^2/(4 eps^2))];
// requires eps >= omega/2. At eps = omega/2 this equals Omega_G through O(lambda).
double weak_coupling_frequency(double omega, double lambda, double epsilon);

// cosh r = sqrt(Omega y2/2 + Omega (y2-y1)^2/(8 y3))
//        + sqrt(Omega y1/2 + Omega (y2-y1)^2/(8 y3)), sinh r the difference.
// A negative radicand outside the validity regime is a breakdown, not clamped.
SqueezeParams weak_coupling_squeeze(double omega, double lambda, double epsilon);

// Time-maximum relative error between |v_r|^2(t) on the vacuum mode of the
// branch (gap frequency for lambda > 0, omega otherwise) and the exact width
// trajectory at the same energy, phases aligned at the upper turning point.
double squeeze_misfit_at(const OscillatorParams& params, double epsilon, double r,
                         int n_t = 1024, double periods = 2.0);

struct MisfitScan {
  double best_r;
  double misfit;  // irreducible: min over the r grid of the time-max misfit
};

MisfitScan squeeze_misfit_scan(const OscillatorParams& params, double epsilon,
                               double r_lo = 0.0, double r_hi = 3.0, int n_r = 1000,
                               int n_t = 1024, double periods = 2.0);

}  // namespace qosc

#endif
