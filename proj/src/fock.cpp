#include "qosc/fock.hpp"

#include <cmath>
#include <numbers>

namespace qosc {

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXd eigenvalues_of(const OscillatorParams& params, const FockSpace& space) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian(params, space),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}
}  // namespace

FockSpace::FockSpace(int dim_, double base_freq_) : dim(dim_), base_freq(base_freq_) {
  if (dim < 2) throw validation_error("Fock dimension must be at least 2");
  if (!(base_freq > 0.0)) throw validation_error("base frequency must be positive");
}

FockSpace make_gap_space(const OscillatorParams& params, int dim) {
  return FockSpace(dim, gap_frequency(params.omega, params.lambda));
}

Eigen::MatrixXd build_hamiltonian(const OscillatorParams& params, const FockSpace& space) {
  const int n = space.dim;
  const double wb = space.base_freq;

  // x = (a + a^dag)/sqrt(2 wb). The powers are taken over two extra basis
  // states and truncated afterwards: x^4 has bandwidth 4, so every retained
  // entry is then the exact operator element and bases of different sizes
  // nest as principal submatrices.
  const int m = n + 2;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i)
    x(i, i + 1) = x(i + 1, i) = std::sqrt(0.5 * (i + 1) / wb);

  // p^2 = (wb/2)(2N + 1 - a^2 - a^dag^2), real symmetric
  Eigen::MatrixXd p2 = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) p2(i, i) = wb * (i + 0.5);
  for (int i = 0; i + 2 < n; ++i)
    p2(i, i + 2) = p2(i + 2, i) =
        -0.5 * wb * std::sqrt(static_cast<double>(i + 1) * (i + 2));

  const Eigen::MatrixXd x2 = x * x;
  const Eigen::MatrixXd x4 = x2 * x2;
  Eigen::MatrixXd h = 0.5 * p2 +
                      (0.5 * params.omega * params.omega) * x2.topLeftCorner(n, n) +
                      (0.25 * params.lambda) * x4.topLeftCorner(n, n);
  return 0.5 * (h + h.transpose().eval());
}

SpectrumResult spectrum(const OscillatorParams& params, const FockSpace& space,
                        double tol) {
  const Eigen::VectorXd ev = eigenvalues_of(params, space);
  const FockSpace bigger(space.dim + std::max(8, space.dim / 4), space.base_freq);
  const Eigen::VectorXd ev2 = eigenvalues_of(params, bigger);

  SpectrumResult out;
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  out.converged_count = 0;
  const int usable = (3 * space.dim) / 4;  // guard band: top quarter excluded
  for (int i = 0; i < usable; ++i) {
    if (std::abs(ev[i] - ev2[i]) <= tol * std::max(1.0, std::abs(ev[i])))
      ++out.converged_count;
    else
      break;
  }
  return out;
}

double ground_energy(const OscillatorParams& params, const FockSpace& space, double tol) {
  const double e1 = eigenvalues_of(params, space)(0);
  const double e2 = eigenvalues_of(params, FockSpace(2 * space.dim, space.base_freq))(0);
  if (std::abs(e1 - e2) > tol)
    throw numerical_error("ground energy not converged: increase truncation");
  return e2;
}

QuadraticCoeffs quadratic_truncation_coeffs(const OscillatorParams& params,
                                            const ModeFunction& mode) {
  if (std::abs(wronskian(mode) - complexd(0.0, 1.0)) > 1e-8)
    throw validation_error("mode must satisfy the Wronskian condition W = i");
  const double w2 = params.omega * params.omega;
  const double lam = params.lambda;
  const double vv = std::norm(mode.u);
  const complexd vc = std::conj(mode.u);
  const complexd vdc = std::conj(mode.u_dot);

  QuadraticCoeffs out;
  out.diag = std::norm(mode.u_dot) + w2 * vv + 3.0 * lam * vv * vv;
  out.offdiag = 0.5 * (vdc * vdc + w2 * vc * vc + 3.0 * lam * vv * vc * vc);
  out.const_shift = -0.75 * lam * vv * vv;
  return out;
}

Eigen::VectorXd squeezed_vacuum_amplitudes(double r, const FockSpace& space) {
  if (!std::isfinite(r)) throw validation_error("r must be finite");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(space.dim);
  const double th = std::tanh(r);
  if (th == 0.0) {
    c(0) = 1.0;
    return c;
  }
  const double log_cosh = std::log(std::cosh(r));
  for (int n = 0; 2 * n < space.dim; ++n) {
    // c_{2n} = (tanh r)^n sqrt((2n)!)/(2^n n!) / sqrt(cosh r), via lgamma.
    // The + sign on tanh is fixed by the defining annihilation property
    // (cosh r a - sinh r a^dag) |psi> = 0 at level n = 1.
    const double log_mag = 0.5 * std::lgamma(2.0 * n + 1.0) - n * std::numbers::ln2 -
                           std::lgamma(n + 1.0) + n * std::log(std::abs(th)) -
                           0.5 * log_cosh;
    const double sign = (th < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    c(2 * n) = sign * std::exp(log_mag);
  }
  return c;
}

double gaussian_overlap(const WidthState& a, const WidthState& b) {
  // exponent coefficients gamma = 1/(4 chi^2) - i chi_dot/(2 chi)
  const complexd ga(0.25 / (a.chi * a.chi), -0.5 * a.chi_dot / a.chi);
  const complexd gb(0.25 / (b.chi * b.chi), -0.5 * b.chi_dot / b.chi);
  const complexd g = std::conj(ga) + gb;
  return std::pow(2.0 * kPi * a.chi * a.chi, -0.25) *
         std::pow(2.0 * kPi * b.chi * b.chi, -0.25) * std::sqrt(kPi / std::abs(g));
}

}  // namespace qosc
