#include "qring/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qring {
namespace {

constexpr double kPi = std::numbers::pi;

// Relative merge gap for analytically computed values: tight enough to keep
// genuinely distinct ring eigenvalues apart, wide enough to absorb the ulp
// difference between lambda_k and lambda_{n-k}.
constexpr double kAnalyticGap = 1e-12;

// Merge adjacent (value, label) pairs closer than gap; value becomes the
// multiplicity-weighted mean of the group.
std::vector<SpectrumEntry> merge_close(std::vector<SpectrumEntry> entries,
                                       double gap) {
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.value != b.value) return a.value < b.value;
              return a.label < b.label;
            });
  std::vector<SpectrumEntry> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().label == e.label &&
        e.value - merged.back().value <= gap) {
      auto& last = merged.back();
      const double weight = last.multiplicity + e.multiplicity;
      last.value = (last.value * last.multiplicity + e.value * e.multiplicity) / weight;
      last.multiplicity += e.multiplicity;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

void check_trace(const Spectrum& s, double expected, const std::string& what) {
  const double err = std::abs(s.trace() - expected);
  if (err > 1e-9 * std::max(1.0, std::abs(expected)))
    throw ComputationError(what + ": trace " + std::to_string(s.trace()) +
                           " deviates from degree sum " +
                           std::to_string(expected));
}

}  // namespace

double dirichlet_ratio(int n, int r, int k) {
  if (k % n == 0) return r + 1.0;
  return std::sin((r + 1) * kPi * k / n) / std::sin(kPi * k / n);
}

double ring_eigenvalue(int n, int r, int k) {
  if (k % n == 0) return 0.0;
  return r + 1.0 - dirichlet_ratio(n, r, k);
}

double ring_eigenvalue_cosine_sum(int n, int r, int k) {
  double sum = 0.0;
  for (int j = 1; j <= r / 2; ++j) sum += std::cos(2.0 * kPi * k * j / n);
  return r - 2.0 * sum;
}

Spectrum ring_eigenvalues(int n, int r) {
  FamilySpec{n, r, 0}.validate();
  std::vector<SpectrumEntry> entries;
  // lambda_k = lambda_{n-k}, so k ranges over half the circle with known
  // multiplicities instead of relying on floating-point coincidence.
  for (int k = 0; k <= n / 2; ++k) {
    const int mult = (k == 0 || 2 * k == n) ? 1 : 2;
    entries.push_back({ring_eigenvalue(n, r, k), mult, EigenvalueLabel::base});
  }
  auto merged = merge_close(std::move(entries), kAnalyticGap * std::max(1.0, 2.0 * r));
  Spectrum s(std::move(merged), n);
  check_trace(s, static_cast<double>(n) * r, "ring_eigenvalues");
  return s;
}

BranchPair branch_map(double lambda, int q, int r) {
  if (q < 1) throw ValidationError("branch_map requires q >= 1");
  if (lambda < 0.0 || lambda > 2.0 * r * (1.0 + 1e-12))
    throw ValidationError("branch_map requires 0 <= lambda <= 2r");
  BranchPair pair;
  pair.mu = (q * r + lambda - 2.0) * (q * r + lambda - 2.0) +
            4.0 * q * (2.0 * r - lambda);
  const double root = std::sqrt(pair.mu);
  pair.f_plus = 0.5 * (q * r + lambda + 2.0 + root);
  pair.f_minus = 0.5 * (q * r + lambda + 2.0 - root);
  return pair;
}

Spectrum full_spectrum(const FamilySpec& spec) {
  spec.validate();
  if (spec.q == 0) return ring_eigenvalues(spec.n, spec.r);

  const int n = spec.n;
  const int r = spec.r;
  const int q = spec.q;
  const int m = n * r / 2;

  Spectrum base = ring_eigenvalues(n, r);
  std::vector<SpectrumEntry> base_entries = base.entries();

  // The circulant ring is bipartite exactly when it is an even cycle: any
  // r >= 4 brings the triangle 0-1-2.
  const bool bipartite = (r == 2 && n % 2 == 0);
  if (bipartite) {
    // Drop one instance of the top eigenvalue 2r; Theorem-style assembly
    // replaces its branch pair by the dedicated entries below.
    auto& top = base_entries.back();
    if (std::abs(top.value - 2.0 * r) > 1e-9)
      throw ComputationError("bipartite base spectrum does not end at 2r");
    if (--top.multiplicity == 0) base_entries.pop_back();
  }

  std::vector<SpectrumEntry> entries;
  for (const auto& e : base_entries) {
    const BranchPair pair = branch_map(e.value, q, r);
    entries.push_back({pair.f_minus, e.multiplicity, EigenvalueLabel::branch_minus});
    entries.push_back({pair.f_plus, e.multiplicity, EigenvalueLabel::branch_plus});
  }
  const int kernel_multiplicity = m * q - n + (bipartite ? 1 : 0);
  if (kernel_multiplicity > 0)
    entries.push_back({2.0, kernel_multiplicity, EigenvalueLabel::added_two});
  if (bipartite)
    entries.push_back(
        {static_cast<double>(r) * (q + 2), 1, EigenvalueLabel::bipartite_top});

  const int total = n + q * m;
  Spectrum s(merge_close(std::move(entries), kAnalyticGap * r * (q + 2)), total);
  // Degree sum of the triangulated graph: n nodes of degree (q+1)r plus qm
  // nodes of degree 2.
  check_trace(s, static_cast<double>(n) * (q + 1) * r + 2.0 * q * m,
              "full_spectrum");
  return s;
}

Spectrum numeric_spectrum(const Graph& g, double tol) {
  if (tol <= 0) throw ValidationError("numeric_spectrum requires tol > 0");
  const DenseMatrix<double> lap = laplacian<double>(g);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success)
    throw ComputationError("numeric_spectrum: eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const int n = g.node_count();
  const double norm = std::max(std::abs(values(0)), std::abs(values(n - 1)));

  const Eigen::MatrixXd residual =
      lap * solver.eigenvectors() - solver.eigenvectors() * values.asDiagonal();
  for (int i = 0; i < n; ++i) {
    if (residual.col(i).norm() > tol * std::max(1.0, norm))
      throw ComputationError(
          "numeric_spectrum: residual bound violated for eigenvalue " +
          std::to_string(values(i)));
  }

  const double floor = -tol * std::max(1.0, norm);
  std::vector<SpectrumEntry> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) {
    double v = values(i);
    if (v < floor)
      throw ComputationError(
          "numeric_spectrum: negative eigenvalue beyond noise floor: " +
          std::to_string(v));
    if (v < 0.0) v = 0.0;
    entries.push_back({v, 1, EigenvalueLabel::numeric});
  }
  const double gap = 1e-8 * std::max(1.0, values(n - 1));
  return Spectrum(merge_close(std::move(entries), gap), n);
}

}  // namespace qring
