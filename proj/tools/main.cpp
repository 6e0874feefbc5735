// qosc: command-line scenarios over the quartic-oscillator Gaussian machinery,
// emitting deterministic CSV or JSON tables (numbers serialized with 17
// significant digits, so repeated runs are byte-identical).
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qosc/bogoliubov.hpp"
#include "qosc/closed_form.hpp"
#include "qosc/dynamics.hpp"
#include "qosc/fock.hpp"
#include "qosc/model.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << fmt_num(row[i]) << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
  for (const auto& [key, value] : t.summary) os << "# " << key << "=" << value << "\n";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_json(std::ostream& os, const Table& t) {
  os << "{\n  \"command\": \"" << json_escape(t.command) << "\",\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << "\"" << json_escape(t.columns[i]) << "\"" << (i + 1 < t.columns.size() ? ", " : "");
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "\n    [";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i)
      os << fmt_num(t.rows[r][i]) << (i + 1 < t.rows[r].size() ? ", " : "");
    os << "]" << (r + 1 < t.rows.size() ? "," : "\n  ");
  }
  os << "],\n  \"summary\": {";
  for (std::size_t i = 0; i < t.summary.size(); ++i)
    os << "\n    \"" << json_escape(t.summary[i].first) << "\": \""
       << json_escape(t.summary[i].second) << "\"" << (i + 1 < t.summary.size() ? "," : "\n  ");
  os << "}\n}\n";
}

void emit(const Table& t, const std::string& format, const std::string& out_path) {
  std::ostringstream buf;
  if (format == "json")
    write_json(buf, t);
  else
    write_csv(buf, t);
  if (out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw qosc::validation_error("cannot open output file: " + out_path);
    f << buf.str();
  }
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return std::nan("");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

struct CommonOpts {
  double omega = 1.0;
  double lambda = 0.0;
  double epsilon = std::nan("");
  double r = 0.5;
  double tmax = std::nan("");
  int samples = 512;
  int dim = 120;
  int levels = 8;
  std::string method = "both";
  std::vector<double> lambdas;
  std::string format = "csv";
  std::string out;
};

Table run_gap(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  const auto vac = qosc::solve_gap_equation(params);
  const double wg = vac.omega_g;
  const double residual =
      std::abs(wg * wg - o.omega * o.omega - 1.5 * o.lambda / wg) / (wg * wg);
  Table t;
  t.command = "gap";
  t.columns = {"omega", "lambda", "omega_g", "epsilon_min", "residual"};
  t.rows = {{o.omega, o.lambda, vac.omega_g, vac.epsilon_min, residual}};
  return t;
}

Table run_roots(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  if (std::isnan(o.epsilon)) throw qosc::validation_error("--epsilon is required");
  const auto traj = qosc::make_trajectory(params, o.epsilon);
  const auto& r = traj.roots;
  double resid = 0.0;
  for (double y : {r.y1, r.y2, r.y3}) {
    const double v = 2.0 * o.epsilon * y - o.omega * o.omega * y * y -
                     r.lam_scale * y * y * y - 0.25;
    resid = std::max(resid, std::abs(v));
  }
  const double T = traj.degenerate ? std::nan("") : qosc::period(traj);
  Table t;
  t.command = "roots";
  t.columns = {"y1", "y2", "y3", "modulus_p", "rate", "period", "cubic_residual"};
  t.rows = {{r.y1, r.y2, r.y3, traj.modulus_p, traj.rate, T, resid}};
  return t;
}

Table run_trajectory(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  if (std::isnan(o.epsilon)) throw qosc::validation_error("--epsilon is required");
  if (o.samples < 2) throw qosc::validation_error("--samples must be at least 2");
  if (o.method != "closed" && o.method != "ode" && o.method != "both")
    throw qosc::validation_error("--method must be one of closed|ode|both");

  std::optional<qosc::EllipticTrajectory> traj;
  double t_default;
  qosc::WidthState initial(1.0, 0.0);
  if (o.lambda > 0.0) {
    traj = qosc::make_trajectory(params, o.epsilon);
    const double wg = qosc::gap_frequency(o.omega, o.lambda);
    t_default = 2.0 * (traj->degenerate ? kPi / wg : qosc::period(*traj));
    initial = qosc::width_state_at(*traj, 0.0);
  } else {
    t_default = 2.0 * kPi / o.omega;
    initial = qosc::WidthState(
        std::sqrt(qosc::harmonic_trajectory(params, o.epsilon, 0.0)), 0.0);
  }
  const double tmax = std::isnan(o.tmax) ? t_default : o.tmax;
  if (!(tmax > 0.0)) throw qosc::validation_error("--tmax must be positive");

  std::vector<double> tgrid(static_cast<std::size_t>(o.samples));
  for (int i = 0; i < o.samples; ++i)
    tgrid[static_cast<std::size_t>(i)] = tmax * static_cast<double>(i) / (o.samples - 1);

  std::vector<double> y_closed;
  if (o.method != "ode") {
    y_closed.reserve(tgrid.size());
    for (double tt : tgrid)
      y_closed.push_back(o.lambda > 0.0 ? qosc::chi_squared_at(*traj, tt)
                                        : qosc::harmonic_trajectory(params, o.epsilon, tt));
  }
  std::vector<double> y_ode;
  if (o.method != "closed") {
    const auto samples = qosc::integrate_width(params, initial, 0.0, tmax, o.samples);
    y_ode.reserve(samples.size());
    for (const auto& s : samples) y_ode.push_back(s.state.chi * s.state.chi);
  }

  Table t;
  t.command = "trajectory";
  if (o.method == "closed") {
    t.columns = {"t", "y_closed"};
    for (std::size_t i = 0; i < tgrid.size(); ++i) t.rows.push_back({tgrid[i], y_closed[i]});
  } else if (o.method == "ode") {
    t.columns = {"t", "y_ode"};
    for (std::size_t i = 0; i < tgrid.size(); ++i) t.rows.push_back({tgrid[i], y_ode[i]});
  } else {
    t.columns = {"t", "y_closed", "y_ode", "abs_diff"};
    double worst = 0.0;
    for (std::size_t i = 0; i < tgrid.size(); ++i) {
      const double d = std::abs(y_closed[i] - y_ode[i]);
      worst = std::max(worst, d);
      t.rows.push_back({tgrid[i], y_closed[i], y_ode[i], d});
    }
    t.summary.emplace_back("max_abs_diff", fmt_num(worst));
  }
  return t;
}

Table run_squeeze(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  if (std::isnan(o.epsilon)) throw qosc::validation_error("--epsilon is required");
  const qosc::SqueezeParams sq =
      o.lambda > 0.0 ? qosc::weak_coupling_squeeze(o.omega, o.lambda, o.epsilon)
                     : qosc::harmonic_squeeze_from_energy(o.omega, o.epsilon);
  const double defect = std::abs(sq.cosh_r * sq.cosh_r - sq.sinh_r * sq.sinh_r - 1.0);
  Table t;
  t.command = "squeeze";
  t.columns = {"r", "cosh_r", "sinh_r", "omega_eff", "norm_defect"};
  t.rows = {{sq.r, sq.cosh_r, sq.sinh_r, sq.omega_eff, defect}};
  t.summary.emplace_back("branch", o.lambda > 0.0 ? "weak" : "harmonic");
  return t;
}

Table run_spectrum(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  if (o.levels < 1) throw qosc::validation_error("--levels must be at least 1");
  const auto space = qosc::make_gap_space(params, o.dim);
  if (o.levels > o.dim) throw qosc::validation_error("--levels cannot exceed --dim");
  const auto spec = qosc::spectrum(params, space);
  const auto vac = qosc::solve_gap_equation(params);

  Table t;
  t.command = "spectrum";
  t.columns = {"n", "energy"};
  for (int n = 0; n < o.levels; ++n)
    t.rows.push_back({static_cast<double>(n), spec.eigenvalues[static_cast<std::size_t>(n)]});
  t.summary.emplace_back("e0", fmt_num(spec.eigenvalues[0]));
  t.summary.emplace_back("epsilon_min", fmt_num(vac.epsilon_min));
  t.summary.emplace_back("gap", fmt_num(vac.epsilon_min - spec.eigenvalues[0]));
  t.summary.emplace_back("converged_count", std::to_string(spec.converged_count));
  if (spec.converged_count < o.levels)
    t.summary.emplace_back("warning", "requested levels not converged; increase --dim");
  return t;
}

Table run_weakcheck(const CommonOpts& o) {
  if (o.lambdas.empty()) throw qosc::validation_error("--lambdas must list at least one value");
  if (std::isnan(o.epsilon)) throw qosc::validation_error("--epsilon is required");

  Table t;
  t.command = "weakcheck";
  t.columns = {"lambda", "root_err", "freq_err", "norm_defect", "gap_freq_err"};
  std::vector<double> lx, ly_root, ly_freq, ly_defect, ly_gap;
  for (double lam : o.lambdas) {
    if (!(lam > 0.0)) throw qosc::validation_error("lambda grid values must be positive");
    const qosc::OscillatorParams params(o.omega, lam);
    const auto exact = qosc::turning_points(params, o.epsilon);
    const auto approx = qosc::weak_coupling_roots(o.omega, lam, o.epsilon);
    const double root_err =
        std::max(std::abs(approx.y1 - exact.y1), std::abs(approx.y2 - exact.y2));

    const auto traj = qosc::make_trajectory(params, o.epsilon);
    const double omega_fund = kPi / qosc::period(traj);  // y ~ cos(2 Omega t)
    const double freq_err =
        std::abs(omega_fund - qosc::weak_coupling_frequency(o.omega, lam, o.epsilon));

    const auto sq = qosc::weak_coupling_squeeze(o.omega, lam, o.epsilon);
    const double defect = std::abs(sq.cosh_r * sq.cosh_r - sq.sinh_r * sq.sinh_r - 1.0);

    const double gap_freq_err =
        std::abs(qosc::weak_coupling_frequency(o.omega, lam, 0.5 * o.omega) -
                 qosc::gap_frequency(o.omega, lam));

    t.rows.push_back({lam, root_err, freq_err, defect, gap_freq_err});
    lx.push_back(std::log(lam));
    ly_root.push_back(std::log(root_err));
    ly_freq.push_back(std::log(freq_err));
    ly_defect.push_back(std::log(defect));
    ly_gap.push_back(std::log(gap_freq_err));
  }
  t.summary.emplace_back("slope_root_err", fmt_num(fit_slope(lx, ly_root)));
  t.summary.emplace_back("slope_freq_err", fmt_num(fit_slope(lx, ly_freq)));
  t.summary.emplace_back("slope_norm_defect", fmt_num(fit_slope(lx, ly_defect)));
  t.summary.emplace_back("slope_gap_freq_err", fmt_num(fit_slope(lx, ly_gap)));
  return t;
}

Table run_nonlinearity(const CommonOpts& o) {
  const qosc::OscillatorParams params(o.omega, o.lambda);
  const auto vac = qosc::solve_gap_equation(params);
  const double floor =
      o.lambda > 0.0 ? vac.epsilon_min : 0.5 * o.omega;  // Gaussian energy floor
  const double eps = std::isnan(o.epsilon) ? floor + 1.0 : o.epsilon;

  double periods = 2.0;
  if (!std::isnan(o.tmax)) {
    double T;
    if (o.lambda > 0.0) {
      const auto traj = qosc::make_trajectory(params, eps);
      T = traj.degenerate ? kPi / vac.omega_g : qosc::period(traj);
    } else {
      T = kPi / o.omega;
    }
    if (!(o.tmax > 0.0)) throw qosc::validation_error("--tmax must be positive");
    periods = o.tmax / T;
  }

  const double residual_max = qosc::meanfield_residual(params, o.r);
  double best_r, misfit;
  if (o.lambda > 0.0) {
    const auto scan = qosc::squeeze_misfit_scan(params, eps, 0.0, 3.0, 1000, 1024, periods);
    best_r = scan.best_r;
    misfit = scan.misfit;
  } else {
    best_r = qosc::harmonic_squeeze_from_energy(o.omega, eps).r;
    misfit = qosc::squeeze_misfit_at(params, eps, best_r, 1024, periods);
  }

  Table t;
  t.command = "nonlinearity";
  t.columns = {"lambda", "r", "epsilon", "residual_max", "best_fit_r", "irreducible_misfit"};
  t.rows = {{o.lambda, o.r, eps, residual_max, best_r, misfit}};
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian width dynamics of the quartic anharmonic oscillator"};
  app.require_subcommand(1);

  CommonOpts o;

  auto add_common = [&o](CLI::App* cmd, bool wants_lambda = true) {
    cmd->add_option("--omega", o.omega, "angular frequency (> 0)");
    if (wants_lambda) cmd->add_option("--lambda", o.lambda, "quartic coupling (>= 0)");
    cmd->add_option("--format", o.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default: stdout)");
  };

  CLI::App* gap = app.add_subcommand("gap", "gap frequency and minimum Gaussian energy");
  add_common(gap);

  CLI::App* roots = app.add_subcommand("roots", "turning points of the quadrature cubic");
  add_common(roots);
  roots->add_option("--epsilon", o.epsilon, "energy expectation value");

  CLI::App* trajectory =
      app.add_subcommand("trajectory", "closed-form and/or ODE width trajectory");
  add_common(trajectory);
  trajectory->add_option("--epsilon", o.epsilon, "energy expectation value");
  trajectory->add_option("--tmax", o.tmax, "time span (default: two periods)");
  trajectory->add_option("--samples", o.samples, "number of grid samples");
  trajectory->add_option("--method", o.method, "closed|ode|both");

  CLI::App* squeeze = app.add_subcommand("squeeze", "energy -> squeeze-parameter dictionary");
  add_common(squeeze);
  squeeze->add_option("--epsilon", o.epsilon, "energy expectation value");

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "truncated Fock-basis eigenvalues vs the Gaussian floor");
  add_common(spectrum_cmd);
  spectrum_cmd->add_option("--dim", o.dim, "truncation dimension");
  spectrum_cmd->add_option("--levels", o.levels, "number of levels to print");

  CLI::App* weakcheck =
      app.add_subcommand("weakcheck", "weak-coupling convergence table and fitted slopes");
  add_common(weakcheck, false);
  weakcheck->add_option("--epsilon", o.epsilon, "energy expectation value");
  weakcheck->add_option("--lambdas", o.lambdas, "comma-separated coupling grid")
      ->delimiter(',');

  CLI::App* nonlinearity = app.add_subcommand(
      "nonlinearity", "mean-field residual and constant-r misfit witness");
  add_common(nonlinearity);
  nonlinearity->add_option("--epsilon", o.epsilon,
                           "energy expectation value (default: floor + 1)");
  nonlinearity->add_option("--r", o.r, "squeeze parameter for the residual probe");
  nonlinearity->add_option("--tmax", o.tmax, "comparison span (default: two periods)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Table t;
    if (gap->parsed())
      t = run_gap(o);
    else if (roots->parsed())
      t = run_roots(o);
    else if (trajectory->parsed())
      t = run_trajectory(o);
    else if (squeeze->parsed())
      t = run_squeeze(o);
    else if (spectrum_cmd->parsed())
      t = run_spectrum(o);
    else if (weakcheck->parsed())
      t = run_weakcheck(o);
    else
      t = run_nonlinearity(o);
    emit(t, o.format, o.out);
  } catch (const qosc::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qosc::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
