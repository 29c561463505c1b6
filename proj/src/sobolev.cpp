#include "qtom/sobolev.hpp"

#include <cmath>

#include "qtom/fourier.hpp"

namespace qtom {

namespace {

std::vector<std::size_t> all_dims(const SampledField& f) {
  std::vector<std::size_t> d(f.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = i;
  return d;
}

// |xi|^(2 nu) |F(xi)|^2 summed over the rectangle |xi_d| <= cut * nyquist_d.
double weighted_partial(const SampledField& spec, double nu, double cut) {
  std::vector<double> terms;
  terms.reserve(spec.size());
  if (spec.dim() == 1) {
    const Axis& ax = spec.axes[0];
    const double lim = cut * ax.extent() * (1.0 + 1e-12);
    for (std::size_t i = 0; i < ax.count; ++i) {
      const double xi = ax.coord(i);
      if (std::abs(xi) > lim) continue;
      terms.push_back(std::pow(std::abs(xi), 2.0 * nu) * std::norm(spec.at(i)));
    }
  } else {
    const Axis& a0 = spec.axes[0];
    const Axis& a1 = spec.axes[1];
    const double lim0 = cut * a0.extent() * (1.0 + 1e-12);
    const double lim1 = cut * a1.extent() * (1.0 + 1e-12);
    for (std::size_t i = 0; i < a0.count; ++i) {
      const double x0 = a0.coord(i);
      if (std::abs(x0) > lim0) continue;
      for (std::size_t j = 0; j < a1.count; ++j) {
        const double x1 = a1.coord(j);
        if (std::abs(x1) > lim1) continue;
        const double r2 = x0 * x0 + x1 * x1;
        terms.push_back(std::pow(r2, nu) * std::norm(spec.at(i, j)));
      }
    }
  }
  double vol = 1.0;
  for (const Axis& a : spec.axes) vol *= a.step;
  return pairwise_sum(std::span<const double>(terms)) * vol;
}

std::vector<std::pair<std::size_t, double>> ladder(const SampledField& spec, double nu,
                                                   int levels, std::size_t base_count) {
  std::vector<std::pair<std::size_t, double>> est;
  for (int j = 0; j < levels; ++j) {
    const int back = levels - 1 - j;
    const double cut = std::pow(std::sqrt(0.5), back);
    const std::size_t count = base_count >> back;
    est.emplace_back(count, weighted_partial(spec, nu, cut));
  }
  return est;
}

}  // namespace

const char* to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::stable: return "stable";
    case RegularityVerdict::diverging: return "diverging";
    case RegularityVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double sobolev_seminorm(const SampledField& f, double nu) {
  if (nu < 0.0) throw std::invalid_argument("sobolev_seminorm: nu must be >= 0");
  f.validate();
  const auto dims = all_dims(f);
  const SampledField spec = continuous_ft(f, dims, -1);
  return weighted_partial(spec, nu, 1.0);
}

RegularityVerdict classify(const std::vector<std::pair<std::size_t, double>>& estimates) {
  if (estimates.size() < 3) return RegularityVerdict::inconclusive;
  bool all_flat = true;
  double final_ratio = 1.0;
  for (std::size_t j = 1; j < estimates.size(); ++j) {
    const double prev = estimates[j - 1].second;
    const double curr = estimates[j].second;
    const double ratio = (prev == 0.0) ? (curr == 0.0 ? 1.0 : 10.0) : curr / prev;
    if (ratio < 0.95 || ratio > 1.05) all_flat = false;
    final_ratio = ratio;
  }
  if (all_flat) return RegularityVerdict::stable;
  if (final_ratio > 1.5) return RegularityVerdict::diverging;
  return RegularityVerdict::inconclusive;
}

RegularityReport membership_report(const SampledField& f, double nu, int refinements) {
  if (nu < 0.0) throw std::invalid_argument("membership_report: nu must be >= 0");
  if (refinements < 3) throw std::invalid_argument("membership_report: refinements must be >= 3");
  f.validate();
  const std::size_t shift = static_cast<std::size_t>(refinements - 1);
  for (const Axis& a : f.axes) {
    if (a.count % (std::size_t(1) << shift) != 0 || (a.count >> shift) < 8)
      throw std::invalid_argument(
          "membership_report: axis count must be divisible by 2^(refinements-1) with >= 8 "
          "points at the coarsest level");
  }

  const auto dims = all_dims(f);
  const SampledField spec = continuous_ft(f, dims, -1);
  const SampledField fourier_side = continuous_ft(spec, dims, -1);

  RegularityReport rep;
  rep.nu = nu;
  rep.norm_estimates = ladder(spec, nu, refinements, f.axes[0].count);
  rep.fourier_side_estimates = ladder(fourier_side, nu, refinements, f.axes[0].count);
  rep.verdict = classify(rep.norm_estimates);
  const auto& est = rep.norm_estimates;
  const double prev = est[est.size() - 2].second;
  rep.growth_ratio = (prev == 0.0) ? 1.0 : est.back().second / prev;
  return rep;
}

std::pair<bool, RegularityReport> v_gate(const DensityKernel& kernel) {
  RegularityReport rep = membership_report(kernel.rho, 2.0, 3);
  const bool ok = rep.verdict == RegularityVerdict::stable &&
                  classify(rep.fourier_side_estimates) == RegularityVerdict::stable;
  return {ok, std::move(rep)};
}

}  // namespace qtom
