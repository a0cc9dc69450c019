#ifndef QRING_METRICS_HPP
#define QRING_METRICS_HPP

#include <string_view>

#include "qring/graph.hpp"
#include "qring/spectra.hpp"
#include "qring/spectrum.hpp"

namespace qring {

/// paper: closed forms evaluated at the base-ring index k = 1, as the source
/// formulas read. spectral: the same definitions applied to the assembled
/// spectrum of the actual graph. The two disagree by construction on Tmax
/// (and on T whenever the k = 1 branch pair is not the true extreme pair);
/// both are kept so the difference stays visible.
enum class MetricsMode { paper, spectral };

std::string_view to_string(MetricsMode mode);

struct MetricsReport {
  FamilySpec spec;
  MetricsMode mode = MetricsMode::spectral;
  double h = 0.0;      ///< best-constant edge weight
  double gamma = 0.0;  ///< per-step contraction factor
  double T = 0.0;      ///< convergence time, iterations
  double H1 = 0.0;     ///< first-order network coherence
  double H2 = 0.0;     ///< second-order network coherence
  double Tmax = 0.0;   ///< maximum communication time-delay
  /// Paper mode only: the delay bound exactly as the closed form prints it
  /// (minus branch, pi / (2 f_minus(lambda_1))). See max_delay_paper.
  double Tmax_printed = 0.0;
  bool has_Tmax_printed = false;
};

/// Best constant edge weight h = 2 / (lambda2 + lambda_max), the unique
/// positive solution of |1 - h lambda2| = |1 - h lambda_max|.
double best_constant_h(double lambda2, double lambda_max);

/// Contraction factor max(|1 - h lambda2|, |1 - h lambda_max|); equals
/// (lambda_max - lambda2) / (lambda_max + lambda2) at the best-constant h.
double gamma_from_h(double h, double lambda2, double lambda_max);

/// T = 1 / ln(1 / gamma). gamma = 0 yields 0; gamma >= 1 or T beyond 1e12
/// throws ComputationError (no contraction / divergent horizon).
double convergence_time(double gamma);

/// Convergence time closed form: evaluates
///   1 / ln( ((q+1)r + 3 - l1) / sqrt((1 - (q+1)r + l1)^2 + 4q(r - 1 + l1)) )
/// with l1 = dirichlet_ratio(n, r, 1). Identical to the best-constant chain
/// applied to the branch pair at the base eigenvalue lambda_1. Requires q >= 1.
double convergence_time_paper(const FamilySpec& spec);

struct CoherencePair {
  double H1 = 0.0;
  double H2 = 0.0;
};

/// Coherence closed forms: sums over base indices k = 1..n-1 of
/// 2 / (2 f_plus(lambda_k)) and 2 / (2 f_plus(lambda_k))^2, scaled by
/// 1 / (2n). Requires q >= 1.
CoherencePair coherence_paper(const FamilySpec& spec);

/// H1 = (1/2N) sum 1/lambda, H2 = (1/2N) sum 1/lambda^2 over the strictly
/// positive eigenvalues of a connected spectrum, multiplicities included;
/// N is the spectrum's node count.
CoherencePair coherence_spectral(const Spectrum& s);

/// Delay bound exactly as the closed form prints it: pi / ((q+1)r + 3 - l1
/// - c1) = pi / (2 f_minus(lambda_1)). Note this picks the minus branch; it
/// grows with q. Kept verbatim; the report's paper-mode Tmax uses
/// max_delay_paper_largest instead. Requires q >= 1.
double max_delay_paper(const FamilySpec& spec);

/// Delay bound from the largest-eigenvalue closed form at k = 1:
/// pi / ((q+1)r + 3 - l1 + c1) = pi / (2 f_plus(lambda_1)). This is the
/// quantity whose published trend decreases in q. Requires q >= 1.
double max_delay_paper_largest(const FamilySpec& spec);

/// Tmax = pi / (2 lambda_max) over the assembled multiset.
double max_delay_spectral(const Spectrum& s);

/// Bundles the metric set for one family member.
///   paper mode: closed forms (Tmax from the largest-eigenvalue form;
///   the printed minus-branch value is included as Tmax_printed).
///   spectral mode: definitions applied to full_spectrum(spec).
/// For q = 0 both modes reduce to the base-ring spectrum path.
MetricsReport metrics_report(const FamilySpec& spec, MetricsMode mode);

/// Compact single-line JSON object with fields n, r, q, mode, h, gamma, T,
/// H1, H2, Tmax (+ Tmax_printed in paper mode).
std::string metrics_report_json(const MetricsReport& report);

}  // namespace qring

#endif
