// Legendre elliptic integral of the first kind and Jacobi elliptic functions,
// computed with the arithmetic-geometric mean and the descending Landen
// amplitude recursion (Abramowitz & Stegun 16.4, 17.6), iterated to machine
// precision. Modulus convention throughout:
//   F(kappa, p) = int_0^kappa dtheta / sqrt(1 - p^2 sin^2 theta).

#ifndef QOSC_ELLIPTIC_HPP
#define QOSC_ELLIPTIC_HPP

namespace qosc {

// Complete integral K(p) = F(pi/2, p), p in [0, 1).
double complete_elliptic_K(double p);

// Incomplete integral for kappa in [0, pi/2], p in [0, 1).
double incomplete_elliptic_F(double kappa, double p);

struct JacobiElliptic {
  double sn;
  double cn;
  double dn;
};

// sn, cn, dn at argument u (any real; reduced modulo the 4K period), p in [0, 1).
JacobiElliptic jacobi_elliptic(double u, double p);

}  // namespace qosc

#endif
