#ifndef QRING_SPECTRA_HPP
#define QRING_SPECTRA_HPP

#include "qring/graph.hpp"
#include "qring/spectrum.hpp"

namespace qring {

/// Dirichlet kernel ratio sin((r+1) pi k / n) / sin(pi k / n); equals r + 1
/// at k = 0 (the limit).
double dirichlet_ratio(int n, int r, int k);

/// k-th ring eigenvalue via the closed form r + 1 - dirichlet_ratio(n, r, k).
double ring_eigenvalue(int n, int r, int k);

/// Same eigenvalue via the cosine sum r - 2 * sum_{j=1}^{r/2} cos(2 pi k j / n).
/// Kept as an independent evaluation route; agrees with ring_eigenvalue to
/// better than 1e-12.
double ring_eigenvalue_cosine_sum(int n, int r, int k);

/// Full base-ring spectrum with exact multiplicities (k and n-k merged).
Spectrum ring_eigenvalues(int n, int r);

/// The two eigenvalues of the triangulated graph generated by one base
/// eigenvalue. f_plus * f_minus == lambda * (q + 2) up to rounding.
struct BranchPair {
  double f_plus = 0.0;
  double f_minus = 0.0;
  double mu = 0.0;  ///< discriminant (qr + lambda - 2)^2 + 4q(2r - lambda)
};

/// f_pm = (qr + lambda + 2 ± sqrt(mu)) / 2 for a base eigenvalue lambda of an
/// r-regular graph. Requires 0 <= lambda <= 2r and q >= 1.
BranchPair branch_map(double lambda, int q, int r);

/// Assembled analytic spectrum of the triangulated family member:
///   non-bipartite base: branch pairs over all n base eigenvalues, plus the
///   value 2 with multiplicity mq - n;
///   bipartite base: branch pairs over the n-1 base eigenvalues below 2r,
///   the value 2 with multiplicity mq - n + 1, and r(q + 2) once.
/// q = 0 returns ring_eigenvalues(n, r).
Spectrum full_spectrum(const FamilySpec& spec);

/// Dense symmetric eigendecomposition of laplacian(g). Every (value, vector)
/// pair satisfies ||L v - value v|| <= tol * ||L||_2; violations and solver
/// non-convergence throw ComputationError. Values in [-tol * max(1, ||L||), 0)
/// are clamped to zero; near-duplicates within 1e-8 * max(1, lambda_max) are
/// merged into multiplicities.
Spectrum numeric_spectrum(const Graph& g, double tol = 1e-10);

}  // namespace qring

#endif
