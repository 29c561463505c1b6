#include "qtom/interp.hpp"

#include <cmath>

#include "qtom/fourier.hpp"

namespace qtom {

namespace {

// Zero-pad the DFT spectrum of each length-n line to length u*n. The Nyquist
// bin of even-length lines is split between +n/2 and -n/2 so real symmetric
// data stays real symmetric.
std::vector<cplx> upsample_lines(const std::vector<cplx>& in, std::size_t n_lines,
                                 std::size_t n, std::size_t stride_in, std::size_t line_step_in,
                                 std::size_t u, std::size_t stride_out, std::size_t line_step_out,
                                 std::size_t out_total) {
  std::vector<cplx> out(out_total, cplx(0.0, 0.0));
  const std::size_t un = u * n;
  std::vector<cplx> line(n), fine(un);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t r = 0; r < n_lines; ++r) {
    for (std::size_t j = 0; j < n; ++j) line[j] = in[r * line_step_in + j * stride_in];
    dft(line, -1);
    std::fill(fine.begin(), fine.end(), cplx(0.0, 0.0));
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < n; ++k) {
      if (k < half)
        fine[k] = line[k];
      else if (k > half || n % 2 == 1)
        fine[un - (n - k)] = line[k];
      else {  // even-n Nyquist bin
        fine[half] = 0.5 * line[k];
        fine[un - half] = 0.5 * line[k];
      }
    }
    dft(fine, +1);
    for (std::size_t j = 0; j < un; ++j) out[r * line_step_out + j * stride_out] = fine[j] * inv_n;
  }
  return out;
}

// 6-point Lagrange weights on nodes -2..3 relative to the left-of-fraction
// sample; O(h^6) on the upsampled lattice.
inline void lagrange6(double t, double w[6]) {
  const double n[6] = {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0};
  for (int a = 0; a < 6; ++a) {
    double acc = 1.0;
    for (int b = 0; b < 6; ++b) {
      if (b == a) continue;
      acc *= (t - n[b]) / (n[a] - n[b]);
    }
    w[a] = acc;
  }
}

}  // namespace

SampledField spectral_upsample(const SampledField& f, std::size_t dim, std::size_t factor) {
  f.validate();
  if (dim >= f.dim()) throw std::invalid_argument("spectral_upsample: dim out of range");
  if (factor < 1) throw std::invalid_argument("spectral_upsample: factor >= 1 required");
  const std::size_t n = f.axes[dim].count;
  SampledField out;
  out.axes = f.axes;
  out.axes[dim].step = f.axes[dim].step / static_cast<double>(factor);
  out.axes[dim].count = n * factor;
  const std::size_t n_lines = f.size() / n;
  if (f.dim() == 1 || dim == 1) {
    out.data = upsample_lines(f.data, n_lines, n, 1, n, factor, 1, n * factor,
                              n_lines * n * factor);
  } else {
    const std::size_t n1 = f.axes[1].count;
    out.data = upsample_lines(f.data, n_lines, n, n1, 1, factor, n1, 1, n * factor * n1);
  }
  return out;
}

SpectralInterpolant::SpectralInterpolant(const SampledField& f, std::size_t upsample) {
  f.validate();
  if (f.dim() != 2) throw std::invalid_argument("SpectralInterpolant: 2-D field required");
  if (upsample < 1) throw std::invalid_argument("SpectralInterpolant: upsample >= 1 required");
  coarse_[0] = f.axes[0];
  coarse_[1] = f.axes[1];
  for (int d = 0; d < 2; ++d) {
    fine_[d].min = coarse_[d].min;
    fine_[d].step = coarse_[d].step / static_cast<double>(upsample);
    fine_[d].count = coarse_[d].count * upsample;
  }
  const std::size_t n0 = coarse_[0].count, n1 = coarse_[1].count;
  const std::size_t f0 = fine_[0].count, f1 = fine_[1].count;
  // pass 1: upsample along axis 1 (contiguous lines)
  std::vector<cplx> tmp =
      upsample_lines(f.data, n0, n1, 1, n1, upsample, 1, f1, n0 * f1);
  // pass 2: upsample along axis 0 (strided lines)
  data_ = upsample_lines(tmp, f1, n0, f1, 1, upsample, f1, 1, f0 * f1);
}

cplx SpectralInterpolant::operator()(double x, double y) const {
  if (x < coarse_[0].min || x > coarse_[0].max() || y < coarse_[1].min || y > coarse_[1].max())
    return cplx(0.0, 0.0);
  const std::size_t n0 = fine_[0].count, n1 = fine_[1].count;
  const double ux = (x - fine_[0].min) / fine_[0].step;
  const double uy = (y - fine_[1].min) / fine_[1].step;
  const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(std::floor(ux));
  const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(std::floor(uy));
  double wx[6], wy[6];
  lagrange6(ux - static_cast<double>(ix), wx);
  lagrange6(uy - static_cast<double>(iy), wy);
  // periodic wrap of the fine lattice (the trig interpolant is periodic)
  std::size_t jx[6], jy[6];
  for (int a = 0; a < 6; ++a) {
    std::ptrdiff_t kx = ix - 2 + a, ky = iy - 2 + a;
    kx %= static_cast<std::ptrdiff_t>(n0);
    if (kx < 0) kx += static_cast<std::ptrdiff_t>(n0);
    ky %= static_cast<std::ptrdiff_t>(n1);
    if (ky < 0) ky += static_cast<std::ptrdiff_t>(n1);
    jx[a] = static_cast<std::size_t>(kx);
    jy[a] = static_cast<std::size_t>(ky);
  }
  cplx acc(0.0, 0.0);
  for (int a = 0; a < 6; ++a) {
    const cplx* row = &data_[jx[a] * n1];
    cplx rowacc(0.0, 0.0);
    for (int b = 0; b < 6; ++b) rowacc += row[jy[b]] * wy[b];
    acc += rowacc * wx[a];
  }
  return acc;
}

}  // namespace qtom
