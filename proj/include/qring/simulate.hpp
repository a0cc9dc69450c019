#ifndef QRING_SIMULATE_HPP
#define QRING_SIMULATE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "qring/graph.hpp"

namespace qring {

/// Standard normal draws from a seeded mt19937_64 via Box-Muller on 53-bit
/// uniforms. The seed fully determines the stream, so runs are reproducible
/// bit for bit on a given platform.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1p-53;
  }

  double operator()();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Seeded i.i.d. uniform [0, 1) initial state, one draw per node in index
/// order.
Eigen::VectorXd random_initial_state(int n, std::uint64_t seed);

struct SimConfig {
  std::uint64_t seed = 0;
  /// Iteration count. delay_stability_probe accepts 0 to size its own
  /// horizon; the other runs require steps >= 1.
  int steps = 1000;
  /// Edge weight for the discrete consensus iteration; empty means
  /// best-constant from the numeric spectrum.
  std::optional<double> h;
  double noise_sigma = 1.0;
  /// Integration step for continuous-time runs; delay_stability_probe
  /// accepts 0 to pick its own.
  double dt = 0.0;
  double tau = 0.0;

  void validate() const;
};

struct SimTrace {
  /// ||x(t) - mean * 1||_2 indexed by step, including step 0.
  std::vector<double> disagreement;
  Eigen::VectorXd final_state;
  bool converged = false;
  /// Fitted per-step contraction factor; meaningful for noiseless consensus
  /// runs, NaN elsewhere.
  double measured_rate = 0.0;
  /// Edge weight actually used (resolved best-constant included).
  double h_used = 0.0;
};

/// Synchronous iteration x(t+1) = x(t) - h L x(t). The state average is
/// invariant to machine precision. Three consecutive growth steps of the
/// disagreement raise ComputationError naming h and the stability bound
/// 2 / lambda_max.
SimTrace run_consensus(const Graph& g, const SimConfig& cfg,
                       const Eigen::VectorXd& x0);

/// Euler-Maruyama integration of dx = -L x dt + sigma dW from consensus,
/// discarding a burn-in of ceil(10 / (lambda2 dt)) steps, then returning the
/// time average of (1/N) sum_i (x_i - mean)^2. For sigma = 1 its expectation
/// is the first-order coherence (1/2N) sum 1/lambda. Requires
/// dt <= 0.1 / lambda_max and steps > burn-in. Pass `trace` to capture the
/// disagreement series.
double estimate_first_order_coherence(const Graph& g, const SimConfig& cfg,
                                      SimTrace* trace = nullptr);

enum class DelayVerdict { stable, unstable };

std::string_view to_string(DelayVerdict verdict);

/// Integrates dx/dt = -L x(t - tau) with fixed-step explicit Euler and
/// linear interpolation into the delay buffer, from the impulse state e_0,
/// with constant prehistory. Stable if the final disagreement is below
/// 1e-3 of the initial, unstable above 10x; anything between raises an
/// inconclusive ComputationError. cfg.dt = 0 picks
/// min(0.05 / lambda_max, tau / 20); cfg.steps = 0 sizes the horizon to
/// 80 / lambda2 time units (the minimum accepted is 50 / lambda2).
DelayVerdict delay_stability_probe(const Graph& g, double tau,
                                   const SimConfig& cfg,
                                   SimTrace* trace = nullptr);

/// CSV with columns step,time,disagreement where time = step * dt.
void write_trace_csv(const SimTrace& trace, double dt, std::ostream& out);

}  // namespace qring

#endif
