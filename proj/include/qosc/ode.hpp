// Adaptive Dormand-Prince 5(4) integrator with PI step-size control
// (Lund stabilization) and the standard fourth-order continuous extension,
// after Hairer, Norsett & Wanner, "Solving ODEs I", and the DOPRI5 code.
// Sampled output is produced on caller-supplied times by evaluating the
// dense interpolant between accepted steps; integration runs in either
// time direction.

#ifndef QOSC_ODE_HPP
#define QOSC_ODE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "qosc/model.hpp"

namespace qosc {

struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double max_step = 0.0;  // 0: no limit
};

// The right-hand side returns false when the proposed state lies outside the
// admissible domain; the trial step is then rejected and retried smaller.
template <std::size_t N>
using OdeRhs =
    std::function<bool(double, const std::array<double, N>&, std::array<double, N>&)>;

template <std::size_t N>
using OdeEmit = std::function<void(double, const std::array<double, N>&)>;

namespace dopri5_detail {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

constexpr double safe = 0.9, beta = 0.04, fac_min = 0.2, fac_max = 10.0;

}  // namespace dopri5_detail

template <std::size_t N>
void integrate_dense(const OdeRhs<N>& rhs, std::array<double, N> y, double t0, double t1,
                     const std::vector<double>& sample_times, const OdeEmit<N>& emit,
                     const IntegratorConfig& config = {}) {
  using namespace dopri5_detail;
  using State = std::array<double, N>;

  if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0) || config.max_step < 0.0)
    throw validation_error("integrator tolerances must be positive");

  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  const double eps = std::numeric_limits<double>::epsilon();

  std::size_t next = 0;
  while (next < sample_times.size() && (sample_times[next] - t0) * dir <= 0.0)
    emit(sample_times[next++], y);
  if (span == 0.0) {
    while (next < sample_times.size()) emit(sample_times[next++], y);
    return;
  }

  auto axpy = [](const State& base, double h, const State& k) {
    State r;
    for (std::size_t i = 0; i < N; ++i) r[i] = base[i] + h * k[i];
    return r;
  };

  State k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{};
  if (!rhs(t0, y, k1)) throw validation_error("initial state outside admissible domain");

  double t = t0;
  double h_max = config.max_step > 0.0 ? std::min(config.max_step, span) : span;
  double h = dir * std::min(h_max, span / 256.0);
  double fac_old = 1e-4;

  while ((t1 - t) * dir > 0.0) {
    if (std::abs(h) <= 16.0 * eps * std::max(std::abs(t), 1.0))
      throw numerical_error("step size underflow: stiff or invalid state");
    if ((t + 1.01 * h - t1) * dir > 0.0) h = t1 - t;

    State y2, y3s, y4, y5, y6;
    bool ok = true;
    y2 = axpy(y, h * a21, k1);
    ok = ok && rhs(t + c2 * h, y2, k2);
    for (std::size_t i = 0; ok && i < N; ++i) y3s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    ok = ok && rhs(t + c3 * h, y3s, k3);
    for (std::size_t i = 0; ok && i < N; ++i)
      y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    ok = ok && rhs(t + c4 * h, y4, k4);
    for (std::size_t i = 0; ok && i < N; ++i)
      y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    ok = ok && rhs(t + c5 * h, y5, k5);
    for (std::size_t i = 0; ok && i < N; ++i)
      y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    ok = ok && rhs(t + h, y6, k6);
    State y_new{};
    for (std::size_t i = 0; ok && i < N; ++i)
      y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    ok = ok && rhs(t + h, y_new, k7);

    double err = 2.0;  // forces rejection when a stage left the domain
    if (ok) {
      err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double ee =
            h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sk =
            config.abs_tol + config.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        err += (ee / sk) * (ee / sk);
      }
      err = std::sqrt(err / static_cast<double>(N));
    }

    const double fac11 = std::pow(std::max(err, 1e-32), 0.2 - beta * 0.75);
    if (err <= 1.0) {
      // accepted: build the continuous extension and emit interior samples
      State p0 = y, p1, p2, p3, p4;
      for (std::size_t i = 0; i < N; ++i) {
        p1[i] = y_new[i] - y[i];
        p2[i] = h * k1[i] - p1[i];
        p3[i] = p1[i] - h * k7[i] - p2[i];
        p4[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      const double t_new = t + h;
      const double slack = 1e-12 * std::max(1.0, std::abs(t_new));
      while (next < sample_times.size() && (sample_times[next] - t_new) * dir <= slack) {
        const double ts = sample_times[next];
        const double a = (ts - t) / h, b = 1.0 - a;
        State ys;
        for (std::size_t i = 0; i < N; ++i)
          ys[i] = p0[i] + a * (p1[i] + b * (p2[i] + a * (p3[i] + b * p4[i])));
        emit(ts, ys);
        ++next;
      }

      t = t_new;
      y = y_new;
      k1 = k7;  // first-same-as-last
      double fac = fac11 / std::pow(fac_old, beta);  // PI law: previous error enters
      fac = std::max(1.0 / fac_max, std::min(1.0 / fac_min, fac / safe));
      fac_old = std::max(err, 1e-4);
      h = h / fac;
      if (std::abs(h) > h_max) h = dir * h_max;
    } else {
      h = h / std::min(1.0 / fac_min, fac11 / safe);
    }
  }

  while (next < sample_times.size()) emit(sample_times[next++], y);
}

}  // namespace qosc

#endif
