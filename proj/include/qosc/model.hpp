// Quartic anharmonic oscillator in natural units (hbar = 1, unit mass),
//   H = p^2/2 + omega^2 x^2/2 + lambda x^4/4,
// and the centered Gaussian trial state parameterized by its width chi(t).

#ifndef QOSC_MODEL_HPP
#define QOSC_MODEL_HPP

#include <stdexcept>

namespace qosc {

// Input violates a documented precondition.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iteration or expansion broke down numerically.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OscillatorParams {
  double omega;   // angular frequency, > 0
  double lambda;  // quartic coupling, >= 0 (0 selects the exact harmonic branch)

  OscillatorParams(double omega_, double lambda_);
};

// Width chi > 0 and its rate; these two numbers fully determine the pure
// centered Gaussian (the phase factor -i chi_dot/(2 chi) is derived, not stored).
struct WidthState {
  double chi;
  double chi_dot;

  WidthState(double chi_, double chi_dot_);
};

struct VacuumSolution {
  double omega_g;      // gap frequency, Omega_G^2 = omega^2 + 3 lambda/(2 Omega_G)
  double epsilon_min;  // Omega_G/2 - 3 lambda/(16 Omega_G^2)
};

struct GaussianMoments {
  double dx2;  // <x^2>
  double dp2;  // <p^2>
  double cov;  // <xp + px>/2
};

// Unique positive root of Omega^3 - omega^2 Omega - 3 lambda/2 = 0.
// Newton seeded at max(omega, (3 lambda/2)^{1/3}) with a bisection safeguard.
// Accepts omega = 0 so the massless limit of the cubic can be probed directly.
double gap_frequency(double omega, double lambda);

VacuumSolution solve_gap_equation(const OscillatorParams& params);

// eps = [chi_dot^2 + omega^2 chi^2 + (3 lambda/2) chi^4 + 1/(4 chi^2)] / 2
double energy(const OscillatorParams& params, const WidthState& state);

// V_eff(chi) = omega^2 chi^2/2 + 3 lambda chi^4/4 + 1/(8 chi^2); rejects chi <= 0.
double effective_potential(const OscillatorParams& params, double chi);

// chi_ddot = -omega^2 chi - 3 lambda chi^3 + 1/(4 chi^3) = -dV_eff/dchi
double acceleration(const OscillatorParams& params, const WidthState& state);

// dx2 = chi^2, dp2 = 1/(4 chi^2) + chi_dot^2, cov = chi chi_dot;
// the pure-state identity dx2*dp2 - cov^2 = 1/4 holds for every state.
GaussianMoments gaussian_moments(const WidthState& state);

}  // namespace qosc

#endif
