#include "qosc/bogoliubov.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace qosc {

namespace {
constexpr double kPi = std::numbers::pi;
}

SqueezeParams harmonic_squeeze_from_energy(double omega, double epsilon) {
  if (!(omega > 0.0)) throw validation_error("omega must be positive");
  if (!(epsilon >= 0.5 * omega)) throw validation_error("energy below vacuum energy");
  const double x = epsilon / omega;
  const double sh = std::sqrt(std::max(0.0, x - 0.5));
  const double ch = std::sqrt(x + 0.5);
  return {std::asinh(sh), ch, sh, omega};
}

ModeFunction apply_bogoliubov(const ModeFunction& mode, double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  return {ch * mode.u + sh * std::conj(mode.u),
          ch * mode.u_dot + sh * std::conj(mode.u_dot), mode.t};
}

WeakCouplingRoots weak_coupling_roots(double omega, double lambda, double epsilon) {
  if (!(omega > 0.0)) throw validation_error("omega must be positive");
  if (!(lambda >= 0.0)) throw validation_error("lambda must be non-negative");
  if (!(epsilon > 0.5 * omega))
    throw validation_error("weak-coupling expansion singular at the harmonic vacuum");

  const double w2 = omega * omega;
  const double w6 = w2 * w2 * w2;
  const double e2 = epsilon * epsilon;
  const double root = std::sqrt(1.0 - w2 / (4.0 * e2));
  const double base = epsilon / w2;
  const double c = 3.0 * lambda / (16.0 * w6);
  const double sym = 16.0 * e2 - w2;
  const double asym = (16.0 * e2 - 3.0 * w2) / root;

  WeakCouplingRoots out;
  out.y1 = base * (1.0 - root) - c * (sym - asym);
  out.y2 = base * (1.0 + root) - c * (sym + asym);
  if (lambda > 0.0)
    out.y3 = -2.0 * w2 / (3.0 * lambda) - base +
             (6.0 * e2 * lambda / w6) * (1.0 - w2 / (16.0 * e2));
  return out;
}

double weak_coupling_frequency(double omega, double lambda, double epsilon) {
  if (!(omega > 0.0)) throw validation_error("omega must be positive");
  if (!(lambda >= 0.0)) throw validation_error("lambda must be non-negative");
  if (!(epsilon >= 0.5 * omega)) throw validation_error("energy below vacuum energy");
  const double w2 = omega * omega;
  const double root = std::sqrt(std::max(0.0, 1.0 - w2 / (4.0 * epsilon * epsilon)));
  return omega + 0.75 * lambda / omega * (2.0 * epsilon / w2 + root);
}

SqueezeParams weak_coupling_squeeze(double omega, double lambda, double epsilon) {
  const WeakCouplingRoots roots = weak_coupling_roots(omega, lambda, epsilon);
  const double om = weak_coupling_frequency(omega, lambda, epsilon);
  const double d = roots.y2 - roots.y1;
  const double corr = roots.y3 ? om * d * d / (8.0 * *roots.y3) : 0.0;
  const double sp = 0.5 * om * roots.y2 + corr;
  const double sm = 0.5 * om * roots.y1 + corr;
  if (sp < 0.0 || sm < 0.0)
    throw numerical_error("weak-coupling expansion broke down (negative radicand)");
  const double ch = std::sqrt(sp) + std::sqrt(sm);
  const double sh = std::sqrt(sp) - std::sqrt(sm);
  return {std::asinh(std::max(0.0, sh)), ch, sh, om};
}

namespace {

// Exact width trajectory sampled with its maximum at t = 0, so its phase
// matches |v_r|^2 which also peaks at t = 0.
struct ReferenceWidth {
  std::vector<double> t;
  std::vector<double> y;
  double mode_freq;  // frequency of the vacuum mode carrying v_r
};

ReferenceWidth reference_width(const OscillatorParams& params, double epsilon, int n_t,
                               double periods) {
  if (n_t < 2) throw validation_error("n_t must be at least 2");
  ReferenceWidth ref;
  ref.t.resize(static_cast<std::size_t>(n_t));
  ref.y.resize(static_cast<std::size_t>(n_t));
  if (params.lambda > 0.0) {
    const EllipticTrajectory traj = make_trajectory(params, epsilon);
    ref.mode_freq = gap_frequency(params.omega, params.lambda);
    const double T = traj.degenerate ? kPi / ref.mode_freq : period(traj);
    const double shift = traj.degenerate ? 0.0 : 0.5 * T;  // y(shift) = y2
    for (int i = 0; i < n_t; ++i) {
      const double t = periods * T * static_cast<double>(i) / (n_t - 1);
      ref.t[static_cast<std::size_t>(i)] = t;
      ref.y[static_cast<std::size_t>(i)] = chi_squared_at(traj, t + shift);
    }
  } else {
    ref.mode_freq = params.omega;
    const double T = kPi / params.omega;
    for (int i = 0; i < n_t; ++i) {
      const double t = periods * T * static_cast<double>(i) / (n_t - 1);
      ref.t[static_cast<std::size_t>(i)] = t;
      ref.y[static_cast<std::size_t>(i)] = harmonic_trajectory(params, epsilon, t);
    }
  }
  return ref;
}

double misfit_against(const ReferenceWidth& ref, double r) {
  const double c2 = std::cosh(2.0 * r);
  const double s2 = std::sinh(2.0 * r);
  const double wm = ref.mode_freq;
  double worst = 0.0;
  for (std::size_t i = 0; i < ref.t.size(); ++i) {
    const double wr = (c2 + s2 * std::cos(2.0 * wm * ref.t[i])) / (2.0 * wm);
    worst = std::max(worst, std::abs(wr - ref.y[i]) / ref.y[i]);
  }
  return worst;
}

}  // namespace

double squeeze_misfit_at(const OscillatorParams& params, double epsilon, double r, int n_t,
                         double periods) {
  return misfit_against(reference_width(params, epsilon, n_t, periods), r);
}

MisfitScan squeeze_misfit_scan(const OscillatorParams& params, double epsilon, double r_lo,
                               double r_hi, int n_r, int n_t, double periods) {
  if (n_r < 2 || !(r_hi > r_lo)) throw validation_error("invalid r scan range");
  const ReferenceWidth ref = reference_width(params, epsilon, n_t, periods);
  MisfitScan best{r_lo, std::numeric_limits<double>::infinity()};
  for (int i = 0; i < n_r; ++i) {
    const double r = r_lo + (r_hi - r_lo) * static_cast<double>(i) / (n_r - 1);
    const double m = misfit_against(ref, r);
    if (m < best.misfit) best = {r, m};
  }
  return best;
}

}  // namespace qosc
