#ifndef QRING_SPECTRUM_HPP
#define QRING_SPECTRUM_HPP

#include <iosfwd>
#include <string_view>
#include <vector>

#include "qring/errors.hpp"

namespace qring {

/// Which assembly rule produced an eigenvalue.
enum class EigenvalueLabel {
  base,           ///< eigenvalue of the untriangulated ring
  branch_plus,    ///< (qr + lambda + 2 + sqrt(mu)) / 2
  branch_minus,   ///< (qr + lambda + 2 - sqrt(mu)) / 2
  added_two,      ///< the kernel eigenvalue 2 of the incidence block
  bipartite_top,  ///< r(q + 2), bipartite bases only
  numeric,        ///< from the dense eigensolver
};

std::string_view to_string(EigenvalueLabel label);

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
  EigenvalueLabel label = EigenvalueLabel::numeric;
};

/// Multiset of Laplacian eigenvalues with multiplicities, sorted ascending.
class Spectrum {
 public:
  /// Sorts the entries and checks multiplicities are positive and sum to
  /// `total`. Entries with equal (value, label) are not merged here; the
  /// producers decide their own merge tolerances.
  Spectrum(std::vector<SpectrumEntry> entries, int total);

  const std::vector<SpectrumEntry>& entries() const noexcept {
    return entries_;
  }
  int total() const noexcept { return total_; }

  double min_value() const { return entries_.front().value; }
  double max_value() const { return entries_.back().value; }

  /// Sum of value * multiplicity; equals the Laplacian trace (degree sum).
  double trace() const;

  /// Values repeated by multiplicity, ascending; length total().
  std::vector<double> expanded() const;

  /// CSV with columns value,multiplicity,label; 15 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<SpectrumEntry> entries_;
  int total_ = 0;
};

struct SpectralExtremes {
  double lambda2 = 0.0;    ///< smallest strictly positive eigenvalue
  double lambda_max = 0.0; ///< largest eigenvalue
};

/// Extracts lambda_2 and lambda_max from a connected graph's spectrum.
/// Entries within 1e-8 * max(1, lambda_max) of zero count as the zero
/// eigenvalue; more than one zero means a disconnected graph and is rejected.
SpectralExtremes spectral_extremes(const Spectrum& s);

}  // namespace qring

#endif
