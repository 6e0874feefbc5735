// Direct integration oracles for the width equation and the complex
// mean-field mode equation, plus the Wronskian bookkeeping that ties mode
// functions to canonical creation/annihilation pairs.

#ifndef QOSC_DYNAMICS_HPP
#define QOSC_DYNAMICS_HPP

#include <complex>
#include <vector>

#include "qosc/model.hpp"
#include "qosc/ode.hpp"

namespace qosc {

using complexd = std::complex<double>;

// Complex mode amplitude and rate. Canonical normalization is the Wronskian
// condition u_dot^* u - u^* u_dot = i (the [a, a^dag] = 1 commutator).
struct ModeFunction {
  complexd u;
  complexd u_dot;
  double t = 0.0;
};

complexd wronskian(const ModeFunction& mode);

// u0(t) = e^{-i omega t} / sqrt(2 omega); Wronskian exactly i. In polar form
// u = chi e^{-i theta} this is the constant-width branch with theta_dot =
// 1/(2 chi^2) = omega.
ModeFunction vacuum_mode_harmonic(const OscillatorParams& params, double t);

struct WidthSample {
  double t;
  WidthState state;
};

struct ModeSample {
  double t;
  ModeFunction mode;
};

// chi_ddot = -omega^2 chi - 3 lambda chi^3 + 1/(4 chi^3), sampled on a uniform
// grid of n_samples points covering [t0, t1]. Steps proposing chi <= 0 are
// rejected and retried smaller (the barrier is never reached at finite energy).
std::vector<WidthSample> integrate_width(const OscillatorParams& params,
                                         const WidthState& initial, double t0, double t1,
                                         int n_samples, const IntegratorConfig& config = {});

// v_ddot + omega^2 v + 3 lambda (v^* v) v = 0 as a coupled real 4-dimensional
// system; requires Wronskian = i initial data.
std::vector<ModeSample> integrate_meanfield(const OscillatorParams& params,
                                            const ModeFunction& initial, double t0, double t1,
                                            int n_samples, const IntegratorConfig& config = {});

// Time-maximum of |v_ddot + omega^2 v + 3 lambda |v|^2 v| for the fixed
// superposition v_r = cosh(r) v0 + sinh(r) v0^* built on the gap-frequency
// mode v0. Since v0 solves the linear Omega_G equation, v_ddot = -Omega_G^2 v_r
// analytically; the maximum is taken over one full period of |v_r|^2.
// Zero iff the superposition solves the nonlinear equation.
double meanfield_residual(const OscillatorParams& params, double r, int n_samples = 2048);

}  // namespace qosc

#endif
