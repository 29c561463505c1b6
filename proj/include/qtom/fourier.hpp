#pragma once

#include <span>

#include "qtom/grid.hpp"

namespace qtom {

/// In-place DFT with kernel exp(sign * 2*pi*i * j*k / n), any length.
/// No normalization factor is applied.
void dft(std::span<cplx> v, int sign);

/// Precomputed evaluator for uniform-lattice exponential sums
///   V_k = sum_j u_j * exp(i * sigma * x_k * y_j),
/// with y_j = y0 + j*ystep (j < m) and x_k = x0 + k*xstep (k < K).
/// Bluestein factorization, so input and output lattices are unconstrained.
class ChirpZPlan {
 public:
  ChirpZPlan(double y0, double ystep, std::size_t m, double x0, double xstep,
             std::size_t k, double sigma);

  std::size_t input_size() const { return m_; }
  std::size_t output_size() const { return k_; }

  void apply(std::span<const cplx> in, std::span<cplx> out) const;

 private:
  std::size_t m_ = 0, k_ = 0, pad_ = 0;
  std::vector<cplx> pre_;     // per-j phase, includes exp(i sigma x0 y_j) and chirp
  std::vector<cplx> post_;    // per-k phase, includes exp(i sigma k xstep y0) and chirp
  std::vector<cplx> kernel_;  // FFT of the chirp convolution kernel
};

/// Continuous Fourier transform approximated on the grid.
/// sign = -1: F[f](x) = (2*pi)^-k integral exp(-i x.y) f(y) dy  (per transformed dim)
/// sign = +1: no prefactor, kernel exp(+i x.y); exact inverse of the forward.
/// Transformed dims acquire their conjugate axes.
SampledField continuous_ft(const SampledField& f, std::span<const std::size_t> dims, int sign);

/// Same as continuous_ft restricted to a strict nonempty subset of dims.
SampledField partial_ft(const SampledField& f, std::span<const std::size_t> dims, int sign);

}  // namespace qtom
