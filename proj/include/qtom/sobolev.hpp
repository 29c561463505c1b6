#pragma once

#include "qtom/states.hpp"

namespace qtom {

enum class RegularityVerdict { stable, diverging, inconclusive };

const char* to_string(RegularityVerdict v);

/// Refinement trend of the discrete Sobolev seminorm. norm_estimates pairs
/// (grid count, value) in increasing grid order; fourier_side_estimates is
/// the same protocol applied to the Fourier transform of the field.
struct RegularityReport {
  double nu = 0.0;
  std::vector<std::pair<std::size_t, double>> norm_estimates;
  std::vector<std::pair<std::size_t, double>> fourier_side_estimates;
  RegularityVerdict verdict = RegularityVerdict::inconclusive;  // direct side
  double growth_ratio = 1.0;
};

/// integral |xi|^(2 nu) |F[f](xi)|^2 d xi on the conjugate grid (always
/// finite; membership is read off the refinement trend).
double sobolev_seminorm(const SampledField& f, double nu);

/// Seminorm trend over the dyadic ladder (count x2, extent x sqrt 2 per
/// level, ending at the given grid). Level values are the partial seminorm
/// integrals over each level's conjugate rectangle, so the last entry is the
/// full discrete seminorm. Verdict: stable when all successive ratios lie in
/// [0.95, 1.05], diverging when the final ratio exceeds 1.5.
RegularityReport membership_report(const SampledField& f, double nu, int refinements);

/// Verdict for a bare estimate list, by the same thresholds.
RegularityVerdict classify(const std::vector<std::pair<std::size_t, double>>& estimates);

/// Regularity gate at nu = n + 1 on the kernel and its Fourier transform;
/// true iff both sides are stable. A false gate is advisory, not an error.
std::pair<bool, RegularityReport> v_gate(const DensityKernel& kernel);

}  // namespace qtom
