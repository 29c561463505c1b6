#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qtom {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Violation of a numerical contract (e.g. imaginary residue above the
/// tolerance of a real-valued result). Maps to CLI exit code 4.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable file. Maps to CLI exit code 3.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Uniform grid along one physical dimension: samples are min + k*step,
/// k = 0..count-1.
struct Axis {
  double min = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double coord(std::size_t k) const { return min + static_cast<double>(k) * step; }
  double max() const { return coord(count - 1); }
  double length() const { return static_cast<double>(count) * step; }
  /// Half-width of the covered interval; equals -min for symmetric axes.
  double extent() const { return -min; }

  bool same_grid(const Axis& o, double tol = 1e-9) const;
  /// True when min = -(count/2)*step, i.e. the grid is the DFT-style
  /// symmetric one with 0 as a sample for even counts.
  bool symmetric(double tol = 1e-9) const;
};

/// Symmetric DFT-compatible axis covering [-extent, extent - step] with
/// step = 2*extent/count.
Axis make_axis(double extent, std::size_t count);

/// Axis of the transformed variable: same count, step' = 2*pi/(count*step),
/// symmetric about 0.
Axis conjugate_axis(const Axis& a);

/// Complex-valued samples over one or two axes, row-major over the axis
/// order. Metadata flags are only set after verification.
struct SampledField {
  std::vector<Axis> axes;
  std::vector<cplx> data;
  bool is_real_valued = false;
  bool is_hermitian_kernel = false;

  std::size_t dim() const { return axes.size(); }
  std::size_t size() const { return data.size(); }
  std::size_t count(std::size_t d) const { return axes[d].count; }

  cplx& at(std::size_t i) { return data[i]; }
  const cplx& at(std::size_t i) const { return data[i]; }
  cplx& at(std::size_t i, std::size_t j) { return data[i * axes[1].count + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return data[i * axes[1].count + j]; }

  static SampledField zeros(std::vector<Axis> axes);
  void validate() const;

  /// Sets is_real_valued if max |Im| < tol; returns the residue found.
  double verify_real(double tol = 1e-9);
  /// Sets is_hermitian_kernel if max |a(i,j) - conj a(j,i)| < tol (2-D only).
  double verify_hermitian(double tol = 1e-10);
};

/// Deterministic pairwise (cascade) summation.
cplx pairwise_sum(std::span<const cplx> v);
double pairwise_sum(std::span<const double> v);

/// Volume of one grid cell, i.e. the product of axis steps.
double cell_volume(const SampledField& f);

/// Riemann sum: sum(data) * prod(step_i). Spectrally accurate for smooth
/// decaying integrands on these grids.
cplx integrate(const SampledField& f);

/// Linear (1-D) / bilinear (2-D) interpolation at the given points.
/// Points outside the axis hull evaluate to exactly 0.
std::vector<cplx> resample(const SampledField& f, std::span<const double> points);
std::vector<cplx> resample(const SampledField& f, std::span<const std::array<double, 2>> points);

double l2_norm(const SampledField& f);
double max_abs(const SampledField& f);
/// ||a - b||_2 / ||b||_2 on identical grids.
double rel_l2_diff(const SampledField& a, const SampledField& b);

}  // namespace qtom
