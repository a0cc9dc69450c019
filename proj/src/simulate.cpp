#include "qring/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "qring/spectra.hpp"

namespace qring {
namespace {

double disagreement_norm(const Eigen::VectorXd& x) {
  const double mean = x.mean();
  return (x.array() - mean).matrix().norm();
}

// In-place y = L x without materializing L.
void apply_laplacian(const Graph& g, const Eigen::VectorXd& x,
                     Eigen::VectorXd& y) {
  const int n = g.node_count();
  for (int u = 0; u < n; ++u) {
    double acc = g.degree(u) * x(u);
    for (int v : g.neighbors(u)) acc -= x(v);
    y(u) = acc;
  }
}

// Least-squares slope of ln d(t) over the tail of the usable window; the
// norm decays as gamma^t with no sign oscillation, so the fit is clean once
// transients die out.
double fit_contraction_rate(const std::vector<double>& disagreement) {
  const double d0 = disagreement.front();
  if (d0 <= 0.0) return 0.0;
  const double floor = std::max(1e-13 * d0, 1e-300);
  size_t usable = disagreement.size();
  for (size_t t = 1; t < disagreement.size(); ++t) {
    if (disagreement[t] <= floor) {
      usable = t;
      break;
    }
  }
  const size_t begin = usable / 2;
  if (usable - begin < 4) return 0.0;
  double st = 0, sy = 0, stt = 0, sty = 0;
  const auto count = static_cast<double>(usable - begin);
  for (size_t t = begin; t < usable; ++t) {
    const double y = std::log(disagreement[t]);
    st += static_cast<double>(t);
    sy += y;
    stt += static_cast<double>(t) * t;
    sty += static_cast<double>(t) * y;
  }
  const double slope = (count * sty - st * sy) / (count * stt - st * st);
  return std::exp(slope);
}

}  // namespace

double NormalSampler::operator()() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Eigen::VectorXd random_initial_state(int n, std::uint64_t seed) {
  NormalSampler sampler(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = sampler.uniform();
  return x;
}

void SimConfig::validate() const {
  if (steps < 0) throw ValidationError("steps must be >= 0");
  if (noise_sigma < 0) throw ValidationError("noise_sigma must be >= 0");
  if (dt < 0) throw ValidationError("dt must be >= 0");
  if (tau < 0) throw ValidationError("tau must be >= 0");
  if (h && !(*h > 0)) throw ValidationError("h must be positive");
}

SimTrace run_consensus(const Graph& g, const SimConfig& cfg,
                       const Eigen::VectorXd& x0) {
  cfg.validate();
  if (cfg.steps < 1) throw ValidationError("run_consensus requires steps >= 1");
  const int n = g.node_count();
  if (x0.size() != n)
    throw ValidationError("x0 has " + std::to_string(x0.size()) +
                          " entries for a graph of " + std::to_string(n) +
                          " nodes");

  double h_used = 0.0;
  if (cfg.h) {
    h_used = *cfg.h;
  } else {
    const SpectralExtremes extremes = spectral_extremes(numeric_spectrum(g));
    h_used = best_constant_h(extremes.lambda2, extremes.lambda_max);
  }

  SimTrace trace;
  trace.h_used = h_used;
  trace.disagreement.reserve(cfg.steps + 1);
  Eigen::VectorXd x = x0;
  Eigen::VectorXd lx(n);
  trace.disagreement.push_back(disagreement_norm(x));
  const double d0 = trace.disagreement.front();
  const double noise_floor = 1e-12 * std::max(1.0, d0);

  int growth_streak = 0;
  for (int t = 0; t < cfg.steps; ++t) {
    apply_laplacian(g, x, lx);
    x.noalias() -= h_used * lx;
    const double d = disagreement_norm(x);
    if (d > trace.disagreement.back() && d > noise_floor)
      ++growth_streak;
    else
      growth_streak = 0;
    trace.disagreement.push_back(d);
    if (growth_streak >= 3) {
      const SpectralExtremes extremes = spectral_extremes(numeric_spectrum(g));
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "consensus diverged at step %d: h = %.6g outside the "
                    "stable range (0, 2/lambda_max = %.6g)",
                    t + 1, h_used, 2.0 / extremes.lambda_max);
      throw ComputationError(msg);
    }
  }
  trace.final_state = std::move(x);
  trace.converged = trace.disagreement.back() <= 1e-9 * std::max(1.0, d0);
  trace.measured_rate = fit_contraction_rate(trace.disagreement);
  return trace;
}

double estimate_first_order_coherence(const Graph& g, const SimConfig& cfg,
                                      SimTrace* trace) {
  cfg.validate();
  if (cfg.steps < 1)
    throw ValidationError("estimate_first_order_coherence requires steps >= 1");
  if (cfg.dt <= 0)
    throw ValidationError("estimate_first_order_coherence requires dt > 0");
  const SpectralExtremes extremes = spectral_extremes(numeric_spectrum(g));
  if (cfg.dt > 0.1 / extremes.lambda_max)
    throw ValidationError("dt = " + std::to_string(cfg.dt) +
                          " violates the stability bound 0.1/lambda_max = " +
                          std::to_string(0.1 / extremes.lambda_max));
  const int burn_in =
      static_cast<int>(std::ceil(10.0 / (extremes.lambda2 * cfg.dt)));
  if (cfg.steps <= burn_in)
    throw ValidationError("steps = " + std::to_string(cfg.steps) +
                          " does not exceed the burn-in of " +
                          std::to_string(burn_in) + " steps");

  const int n = g.node_count();
  NormalSampler sampler(cfg.seed);
  const double noise_scale = cfg.noise_sigma * std::sqrt(cfg.dt);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd lx(n);
  if (trace) {
    trace->disagreement.clear();
    trace->disagreement.reserve(cfg.steps + 1);
    trace->disagreement.push_back(0.0);
    trace->measured_rate = std::numeric_limits<double>::quiet_NaN();
  }

  double acc = 0.0;
  for (int t = 1; t <= cfg.steps; ++t) {
    apply_laplacian(g, x, lx);
    x.noalias() -= cfg.dt * lx;
    for (int i = 0; i < n; ++i) x(i) += noise_scale * sampler();
    const double mean = x.mean();
    const double sq = (x.array() - mean).square().sum();
    if (t > burn_in) acc += sq / n;
    if (trace) trace->disagreement.push_back(std::sqrt(sq));
  }
  if (trace) {
    trace->final_state = std::move(x);
    trace->converged = false;
    trace->h_used = 0.0;
  }
  return acc / (cfg.steps - burn_in);
}

std::string_view to_string(DelayVerdict verdict) {
  return verdict == DelayVerdict::stable ? "stable" : "unstable";
}

DelayVerdict delay_stability_probe(const Graph& g, double tau,
                                   const SimConfig& cfg, SimTrace* trace) {
  cfg.validate();
  if (tau < 0) throw ValidationError("tau must be >= 0");
  const SpectralExtremes extremes = spectral_extremes(numeric_spectrum(g));
  const double dt_bound =
      tau > 0 ? std::min(0.05 / extremes.lambda_max, tau / 20.0)
              : 0.05 / extremes.lambda_max;
  const double dt = cfg.dt > 0 ? cfg.dt : dt_bound;
  if (dt > dt_bound * (1 + 1e-12))
    throw ValidationError("dt = " + std::to_string(dt) +
                          " violates the bound min(0.05/lambda_max, tau/20) = " +
                          std::to_string(dt_bound));
  const double min_horizon = 50.0 / extremes.lambda2;
  const int steps =
      cfg.steps > 0 ? cfg.steps
                    : static_cast<int>(std::ceil(80.0 / extremes.lambda2 / dt));
  if (steps * dt < min_horizon * (1 - 1e-12))
    throw ValidationError("horizon " + std::to_string(steps * dt) +
                          " shorter than 50/lambda2 = " +
                          std::to_string(min_horizon) + " time units");

  const int n = g.node_count();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  x(0) = 1.0;  // impulse excites every Laplacian mode of these graphs
  const double d0 = disagreement_norm(x);

  // Delay buffer: x(t - tau) falls between the states lag_steps+1 and
  // lag_steps back, blended linearly. Prehistory is the initial state.
  const double lag = tau / dt;
  const int lag_steps = static_cast<int>(std::floor(lag));
  const double frac = lag - lag_steps;
  const int buffer_size = lag_steps + 2;
  std::vector<Eigen::VectorXd> buffer(buffer_size, x);

  if (trace) {
    trace->disagreement.clear();
    trace->disagreement.reserve(steps + 1);
    trace->disagreement.push_back(d0);
    trace->measured_rate = std::numeric_limits<double>::quiet_NaN();
    trace->h_used = 0.0;
  }

  Eigen::VectorXd delayed(n);
  Eigen::VectorXd lx(n);
  for (int t = 0; t < steps; ++t) {
    if (tau == 0.0) {
      delayed = buffer[t % buffer_size];
    } else {
      const int newer = std::max(t - lag_steps, 0);
      const int older = std::max(t - lag_steps - 1, 0);
      delayed = (1.0 - frac) * buffer[newer % buffer_size] +
                frac * buffer[older % buffer_size];
    }
    apply_laplacian(g, delayed, lx);
    x = buffer[t % buffer_size] - dt * lx;
    buffer[(t + 1) % buffer_size] = x;
    if (trace) trace->disagreement.push_back(disagreement_norm(x));
  }

  const double ratio = disagreement_norm(x) / d0;
  if (trace) {
    trace->final_state = x;
    trace->converged = ratio < 1e-3;
  }
  if (ratio < 1e-3) return DelayVerdict::stable;
  if (ratio > 10.0) return DelayVerdict::unstable;
  throw ComputationError(
      "delay probe inconclusive: disagreement ratio " + std::to_string(ratio) +
      " after " + std::to_string(steps * dt) +
      " time units; rerun with a longer horizon");
}

void write_trace_csv(const SimTrace& trace, double dt, std::ostream& out) {
  out << "step,time,disagreement\n";
  char buf[96];
  for (size_t t = 0; t < trace.disagreement.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%zu,%.15g,%.15g", t, t * dt,
                  trace.disagreement[t]);
    out << buf << '\n';
  }
}

}  // namespace qring
