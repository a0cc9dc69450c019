#include "qring/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace qring {

std::string_view to_string(EigenvalueLabel label) {
  switch (label) {
    case EigenvalueLabel::base: return "base";
    case EigenvalueLabel::branch_plus: return "branch_plus";
    case EigenvalueLabel::branch_minus: return "branch_minus";
    case EigenvalueLabel::added_two: return "added_two";
    case EigenvalueLabel::bipartite_top: return "bipartite_top";
    case EigenvalueLabel::numeric: return "numeric";
  }
  return "unknown";
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, int total)
    : entries_(std::move(entries)), total_(total) {
  if (entries_.empty()) throw ValidationError("spectrum has no entries");
  long long count = 0;
  for (const auto& e : entries_) {
    if (e.multiplicity <= 0)
      throw ValidationError("spectrum entry with non-positive multiplicity");
    count += e.multiplicity;
  }
  if (count != total_)
    throw ValidationError("spectrum multiplicities sum to " +
                          std::to_string(count) + ", expected " +
                          std::to_string(total_));
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     return a.value < b.value;
                   });
}

double Spectrum::trace() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.value * e.multiplicity;
  return sum;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> values;
  values.reserve(total_);
  for (const auto& e : entries_)
    values.insert(values.end(), e.multiplicity, e.value);
  return values;
}

void Spectrum::write_csv(std::ostream& out) const {
  out << "value,multiplicity,label\n";
  char buf[64];
  for (const auto& e : entries_) {
    std::snprintf(buf, sizeof buf, "%.15g", e.value);
    out << buf << ',' << e.multiplicity << ',' << to_string(e.label) << '\n';
  }
}

SpectralExtremes spectral_extremes(const Spectrum& s) {
  const double lambda_max = s.max_value();
  const double zero_tol = 1e-8 * std::max(1.0, std::abs(lambda_max));
  int zero_multiplicity = 0;
  double lambda2 = 0.0;
  bool found = false;
  for (const auto& e : s.entries()) {
    if (std::abs(e.value) <= zero_tol) {
      zero_multiplicity += e.multiplicity;
    } else if (e.value > 0 && !found) {
      lambda2 = e.value;
      found = true;
    }
  }
  if (zero_multiplicity > 1)
    throw ValidationError("spectrum has a repeated zero eigenvalue: graph is disconnected");
  if (zero_multiplicity == 0)
    throw ValidationError("spectrum has no zero eigenvalue: not a Laplacian spectrum");
  if (!found)
    throw ValidationError("spectrum has no positive eigenvalue");
  return {lambda2, lambda_max};
}

}  // namespace qring
