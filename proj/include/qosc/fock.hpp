// Truncated number-basis diagonalization of the full Hamiltonian and
// squeezed-vacuum statistics: an independent, non-Gaussian check on the
// variational results and on the quadratic truncation coefficients.

#ifndef QOSC_FOCK_HPP
#define QOSC_FOCK_HPP

#include <Eigen/Dense>
#include <vector>

#include "qosc/dynamics.hpp"
#include "qosc/model.hpp"

namespace qosc {

// Ladder basis truncated at `dim` states, built at a reference frequency.
struct FockSpace {
  int dim;
  double base_freq;

  FockSpace(int dim_, double base_freq_);
};

// Basis at the gap frequency, where the Gaussian vacuum is the n = 0 state
// and truncation converges fastest.
FockSpace make_gap_space(const OscillatorParams& params, int dim);

// H = p^2/2 + omega^2 x^2/2 + lambda x^4/4 in the truncated ladder basis;
// real symmetric with even/odd parity block structure.
Eigen::MatrixXd build_hamiltonian(const OscillatorParams& params, const FockSpace& space);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  int converged_count;  // leading eigenvalues stable under dim -> dim + dim/4;
                        // the top quarter of the basis is excluded from claims
};

SpectrumResult spectrum(const OscillatorParams& params, const FockSpace& space,
                        double tol = 1e-9);

// Smallest eigenvalue, required to be stable under truncation doubling to
// `tol`; throws numerical_error ("increase truncation") otherwise.
double ground_energy(const OscillatorParams& params, const FockSpace& space,
                     double tol = 1e-10);

// Coefficients of the normal-ordered quadratic truncation of H in the mode's
// ladder operators:
//   diag       * (A^dag A + 1/2)   with diag = |v_dot|^2 + omega^2 |v|^2 + 3 lambda |v|^4
//   offdiag    * A^dag^2           with offdiag = (v_dot^*2 + omega^2 v^*2 + 3 lambda |v|^2 v^*2)/2
//   const_shift                    with const_shift = -(3 lambda/4) |v|^4
// offdiag vanishes identically on the gap-frequency vacuum mode.
struct QuadraticCoeffs {
  double diag;
  complexd offdiag;
  double const_shift;
};

QuadraticCoeffs quadratic_truncation_coeffs(const OscillatorParams& params,
                                            const ModeFunction& mode);

// Number-basis amplitudes of the state annihilated by cosh(r) a - sinh(r) a^dag:
//   c_{2n} = (-tanh r)^n sqrt((2n)!) / (2^n n!) / sqrt(cosh r), odd entries 0.
// Factorials go through lgamma so large n does not overflow.
Eigen::VectorXd squeezed_vacuum_amplitudes(double r, const FockSpace& space);

// |<Psi_A|Psi_B>| from the closed Gaussian overlap integral; 1 iff identical.
double gaussian_overlap(const WidthState& a, const WidthState& b);

}  // namespace qosc

#endif
