// Test-side oracles, kept independent of the implementation paths they check:
// adaptive quadrature, bracketed bisection, golden-section minimization and a
// least-squares log-log slope fit.

#ifndef QOSC_TESTS_ORACLES_HPP
#define QOSC_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Pre-split into uniform panels so narrow features cannot hide between the
// top-level sample points of the adaptive recursion.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int panels = 32) {
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double pa = a + k * h, pb = a + (k + 1) * h;
    const double fa = f(pa), fb = f(pb), fm = f(0.5 * (pa + pb));
    total += detail::adapt(f, pa, pb, fa, fm, fb, detail::simpson(f, pa, pb, fa, fm, fb),
                           tol / panels, 36);
  }
  return total;
}

// Root of f on [lo, hi] with f(lo) f(hi) <= 0.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-10) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

// Parabolic refinement of an extremum from three equally spaced samples.
inline double refine_extremum(double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (denom == 0.0) return y0;
  const double delta = 0.5 * (ym - yp) / denom;
  return y0 - 0.25 * (ym - yp) * delta;
}

}  // namespace oracles

#endif
