#pragma once

#include <memory>

#include "qtom/interp.hpp"
#include "qtom/transforms.hpp"

namespace qtom {

/// Optical tomogram omega(x, alpha): real samples, angle-major layout.
struct Tomogram {
  Axis x_axis;
  std::vector<double> angles;  // sorted, in [0, 2 pi]
  std::vector<double> omega;   // omega[a * x_axis.count + i]

  std::size_t angle_count() const { return angles.size(); }
  double value(std::size_t a, std::size_t i) const { return omega[a * x_axis.count + i]; }
  double& value(std::size_t a, std::size_t i) { return omega[a * x_axis.count + i]; }
  /// Index of a listed angle; throws if absent.
  std::size_t angle_index(double alpha, double tol = 1e-9) const;
};

/// Restriction of a characteristic function to the ray at one angle.
struct RadialSlice {
  double angle = 0.0;
  Axis t_axis;
  std::vector<cplx> values;
};

/// k uniform angles in [0, pi).
std::vector<double> uniform_angles(std::size_t k);

/// Reusable high-accuracy evaluator of f along rays through the origin.
/// Builds the spectral interpolant once; slices are then cheap.
class CharSampler {
 public:
  explicit CharSampler(const CharFunction& cf);
  RadialSlice slice(double alpha) const;

 private:
  Axis t_axis_;
  std::shared_ptr<const SpectralInterpolant> interp_;
};

/// F_alpha(t) = f(t cos a, t sin a); t spans the char axis.
RadialSlice slice_char(const CharFunction& cf, double alpha);

/// omega(x, a) = (2 pi)^-1 integral exp(-i x t) F_a(t) dt, per angle.
Tomogram tomogram_from_char(const CharFunction& cf, std::span<const double> angles);

/// Radon route: rotate coordinates by a, resample W on the rotated lattice,
/// integrate along the line coordinate, scale by (2 pi)^-1. Deliberately
/// independent of the slice-and-transform route.
Tomogram tomogram_from_wigner(const WignerFunction& w, std::span<const double> angles);

/// Diagonal of the rotated kernel, per angle.
Tomogram tomogram_from_rotated_kernel(const DensityKernel& kernel, std::span<const double> angles);

/// f(lambda cos a, lambda sin a) = integral exp(i x lambda) omega(x, a) dx;
/// inverts the per-angle step of tomogram_from_char.
RadialSlice char_slice_from_tomogram(const Tomogram& tom, double alpha);

/// Assemble Cartesian f(x, y) from the polar slices: linear interpolation
/// between the two nearest angles, linear in the signed radius, zero beyond
/// the sampled disk. Needs angles covering [0, pi) (at least 4).
CharFunction char_from_tomogram(const Tomogram& tom);

/// kernel_from_char(char_from_tomogram(tom)).
DensityKernel kernel_from_tomogram(const Tomogram& tom);

}  // namespace qtom
