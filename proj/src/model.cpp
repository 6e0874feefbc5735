#include "qosc/model.hpp"

#include <algorithm>
#include <cmath>

namespace qosc {

OscillatorParams::OscillatorParams(double omega_, double lambda_)
    : omega(omega_), lambda(lambda_) {
  if (!std::isfinite(omega) || !(omega > 0.0))
    throw validation_error("omega must be positive");
  if (!std::isfinite(lambda) || !(lambda >= 0.0))
    throw validation_error("lambda must be non-negative");
}

WidthState::WidthState(double chi_, double chi_dot_) : chi(chi_), chi_dot(chi_dot_) {
  if (!std::isfinite(chi) || !(chi > 0.0))
    throw validation_error("chi must be positive");
  if (!std::isfinite(chi_dot))
    throw validation_error("chi_dot must be finite");
}

double gap_frequency(double omega, double lambda) {
  if (!std::isfinite(omega) || omega < 0.0)
    throw validation_error("omega must be non-negative");
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw validation_error("lambda must be non-negative");
  if (lambda == 0.0) return omega;

  const double b = 1.5 * lambda;
  const auto f = [&](double w) { return (w * w - omega * omega) * w - b; };
  const auto fp = [&](double w) { return 3.0 * w * w - omega * omega; };

  // f is increasing and convex on [seed, inf) with f(seed) <= 0, so Newton
  // converges; the bracket is a safety net only.
  double lo = omega;
  double hi = omega + std::cbrt(b) + 1.0;
  double w = std::max(omega, std::cbrt(b));
  for (int it = 0; it < 200; ++it) {
    const double fw = f(w);
    if (fw > 0.0)
      hi = std::min(hi, w);
    else
      lo = std::max(lo, w);
    double next = w - fw / fp(w);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - w) <= 1e-16 * std::max(1.0, std::abs(w))) {
      w = next;
      break;
    }
    w = next;
  }
  return w;
}

VacuumSolution solve_gap_equation(const OscillatorParams& params) {
  const double w = gap_frequency(params.omega, params.lambda);
  return {w, 0.5 * w - 3.0 * params.lambda / (16.0 * w * w)};
}

double energy(const OscillatorParams& params, const WidthState& state) {
  const double chi2 = state.chi * state.chi;
  return 0.5 * (state.chi_dot * state.chi_dot + params.omega * params.omega * chi2 +
                1.5 * params.lambda * chi2 * chi2 + 0.25 / chi2);
}

double effective_potential(const OscillatorParams& params, double chi) {
  if (!std::isfinite(chi) || !(chi > 0.0))
    throw validation_error("chi must be positive");
  const double chi2 = chi * chi;
  return 0.5 * params.omega * params.omega * chi2 + 0.75 * params.lambda * chi2 * chi2 +
         0.125 / chi2;
}

double acceleration(const OscillatorParams& params, const WidthState& state) {
  const double chi3 = state.chi * state.chi * state.chi;
  return -params.omega * params.omega * state.chi - 3.0 * params.lambda * chi3 +
         0.25 / chi3;
}

GaussianMoments gaussian_moments(const WidthState& state) {
  const double chi2 = state.chi * state.chi;
  return {chi2, 0.25 / chi2 + state.chi_dot * state.chi_dot, state.chi * state.chi_dot};
}

}  // namespace qosc
