#include "qring/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qring {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConvergenceTimeCap = 1e12;

void require_triangulated(const FamilySpec& spec, const char* what) {
  spec.validate();
  if (spec.q < 1)
    throw ValidationError(std::string(what) + " requires q >= 1");
}

// At base index k: num = (q+1)r + 3 - l_k = f_plus + f_minus and
// c1 = sqrt((1 - (q+1)r + l_k)^2 + 4q(r - 1 + l_k)) = f_plus - f_minus.
// Every closed form below is spelled in these two quantities.
struct ClosedFormTerms {
  double num;
  double c1;
};

ClosedFormTerms closed_form_terms(const FamilySpec& spec, int k) {
  const double l = dirichlet_ratio(spec.n, spec.r, k);
  const double qr1 = static_cast<double>(spec.q + 1) * spec.r;
  const double num = qr1 + 3.0 - l;
  const double c1 =
      std::sqrt((1.0 - qr1 + l) * (1.0 - qr1 + l) +
                4.0 * spec.q * (spec.r - 1.0 + l));
  return {num, c1};
}

}  // namespace

std::string_view to_string(MetricsMode mode) {
  return mode == MetricsMode::paper ? "paper" : "spectral";
}

double best_constant_h(double lambda2, double lambda_max) {
  if (lambda2 <= 0.0)
    throw ValidationError("best_constant_h: lambda2 must be positive (connected graph)");
  if (lambda_max < lambda2)
    throw ValidationError("best_constant_h: lambda_max below lambda2");
  return 2.0 / (lambda2 + lambda_max);
}

double gamma_from_h(double h, double lambda2, double lambda_max) {
  return std::max(std::abs(1.0 - h * lambda2), std::abs(1.0 - h * lambda_max));
}

double convergence_time(double gamma) {
  if (gamma < 0.0) throw ValidationError("convergence_time: gamma must be >= 0");
  if (gamma == 0.0) return 0.0;
  if (gamma >= 1.0)
    throw ComputationError("convergence_time: gamma = " +
                           std::to_string(gamma) + " gives no contraction");
  const double t = 1.0 / std::log(1.0 / gamma);
  if (t > kConvergenceTimeCap)
    throw ComputationError("convergence_time: horizon exceeds cap of 1e12 iterations");
  return t;
}

double convergence_time_paper(const FamilySpec& spec) {
  require_triangulated(spec, "convergence_time_paper");
  const auto [num, c1] = closed_form_terms(spec, 1);
  return convergence_time(c1 / num);
}

CoherencePair coherence_paper(const FamilySpec& spec) {
  require_triangulated(spec, "coherence_paper");
  CoherencePair pair;
  for (int k = 1; k < spec.n; ++k) {
    const auto [num, c1] = closed_form_terms(spec, k);
    const double den = num + c1;  // = 2 f_plus(lambda_k)
    pair.H1 += 2.0 / den;
    pair.H2 += 2.0 / (den * den);
  }
  pair.H1 /= 2.0 * spec.n;
  pair.H2 /= 2.0 * spec.n;
  return pair;
}

CoherencePair coherence_spectral(const Spectrum& s) {
  const double lambda_max = s.max_value();
  const double zero_tol = 1e-8 * std::max(1.0, std::abs(lambda_max));
  spectral_extremes(s);  // rejects disconnected spectra
  CoherencePair pair;
  for (const auto& e : s.entries()) {
    if (e.value <= zero_tol) continue;
    pair.H1 += e.multiplicity / e.value;
    pair.H2 += e.multiplicity / (e.value * e.value);
  }
  pair.H1 /= 2.0 * s.total();
  pair.H2 /= 2.0 * s.total();
  return pair;
}

double max_delay_paper(const FamilySpec& spec) {
  require_triangulated(spec, "max_delay_paper");
  const auto [num, c1] = closed_form_terms(spec, 1);
  return kPi / (num - c1);
}

double max_delay_paper_largest(const FamilySpec& spec) {
  require_triangulated(spec, "max_delay_paper_largest");
  const auto [num, c1] = closed_form_terms(spec, 1);
  return kPi / (num + c1);
}

double max_delay_spectral(const Spectrum& s) {
  return kPi / (2.0 * spectral_extremes(s).lambda_max);
}

MetricsReport metrics_report(const FamilySpec& spec, MetricsMode mode) {
  spec.validate();
  MetricsReport report;
  report.spec = spec;
  report.mode = mode;

  if (mode == MetricsMode::paper && spec.q >= 1) {
    const BranchPair at_lambda1 =
        branch_map(ring_eigenvalue(spec.n, spec.r, 1), spec.q, spec.r);
    report.h = best_constant_h(at_lambda1.f_minus, at_lambda1.f_plus);
    report.gamma = gamma_from_h(report.h, at_lambda1.f_minus, at_lambda1.f_plus);
    report.T = convergence_time_paper(spec);
    const CoherencePair coherence = coherence_paper(spec);
    report.H1 = coherence.H1;
    report.H2 = coherence.H2;
    report.Tmax = max_delay_paper_largest(spec);
    report.Tmax_printed = max_delay_paper(spec);
    report.has_Tmax_printed = true;
    return report;
  }

  // Spectral mode, and the degenerate q = 0 family in either mode.
  const Spectrum s = full_spectrum(spec);
  const SpectralExtremes extremes = spectral_extremes(s);
  report.h = best_constant_h(extremes.lambda2, extremes.lambda_max);
  report.gamma = gamma_from_h(report.h, extremes.lambda2, extremes.lambda_max);
  report.T = convergence_time(report.gamma);
  const CoherencePair coherence = coherence_spectral(s);
  report.H1 = coherence.H1;
  report.H2 = coherence.H2;
  report.Tmax = max_delay_spectral(s);
  return report;
}

}  // namespace qring
