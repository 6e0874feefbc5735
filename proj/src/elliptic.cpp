#include "qosc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qosc/model.hpp"

namespace qosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxAgm = 64;

void check_modulus(double p) {
  if (!std::isfinite(p) || p < 0.0 || p >= 1.0)
    throw validation_error("modulus p must lie in [0, 1)");
}

}  // namespace

double complete_elliptic_K(double p) {
  check_modulus(p);
  double a = 1.0;
  double b = std::sqrt((1.0 - p) * (1.0 + p));
  for (int i = 0; i < kMaxAgm && std::abs(a - b) > kEps * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (a + b);
}

double incomplete_elliptic_F(double kappa, double p) {
  check_modulus(p);
  if (!std::isfinite(kappa) || kappa < 0.0 || kappa > 0.5 * kPi * (1.0 + 1e-12))
    throw validation_error("kappa must lie in [0, pi/2]");
  if (kappa == 0.0) return 0.0;
  if (kappa >= 0.5 * kPi * (1.0 - 1e-14)) return complete_elliptic_K(p);

  // Ascending amplitude recursion: tan(phi_{n+1} - phi_n) = (b/a) tan(phi_n),
  // the increment taken on the same pi-branch as phi_n; F = lim phi_n / (2^n a_n).
  double a = 1.0;
  double b = std::sqrt((1.0 - p) * (1.0 + p));
  double phi = kappa;
  double twon = 1.0;
  for (int i = 0; i < kMaxAgm && std::abs(a - b) > kEps * a; ++i) {
    double delta = std::atan2(b * std::sin(phi), a * std::cos(phi));
    delta += kPi * std::round((phi - delta) / kPi);
    phi += delta;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    twon *= 2.0;
  }
  return phi / (twon * a);
}

JacobiElliptic jacobi_elliptic(double u, double p) {
  check_modulus(p);
  if (!std::isfinite(u)) throw validation_error("argument u must be finite");

  // Reduce modulo the 4K period; the doubled amplitude 2^N a_N u then stays
  // small enough that sin/arcsin retain full precision at large times.
  if (p > 0.0) {
    const double period = 4.0 * complete_elliptic_K(p);
    u -= period * std::floor(u / period);
  }

  double as[kMaxAgm], cs[kMaxAgm];
  double a = 1.0;
  double b = std::sqrt((1.0 - p) * (1.0 + p));
  double c = p;
  int n = 0;
  while (n + 1 < kMaxAgm && std::abs(c) > kEps * a) {
    as[n] = a;
    cs[n] = c;
    ++n;
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    as[n] = a;
    cs[n] = c;
  }

  double phi = std::ldexp(a * u, n);  // 2^n a_n u
  for (int k = n; k >= 1; --k) {
    const double s = std::clamp(cs[k] / as[k] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  JacobiElliptic j;
  j.sn = std::sin(phi);
  j.cn = std::cos(phi);
  j.dn = std::sqrt(std::max(0.0, 1.0 - p * p * j.sn * j.sn));
  return j;
}

}  // namespace qosc
