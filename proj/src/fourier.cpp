#include "qtom/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace qtom {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Twiddle tables are cached per (size, sign). The library is single-threaded
// by design (determinism contract), so a plain static map suffices.
const std::vector<cplx>& twiddles(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, std::vector<cplx>> cache;
  auto& tab = cache[{n, sign}];
  if (tab.empty()) {
    tab.resize(n / 2);
    const double ang = static_cast<double>(sign) * kTwoPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k)
      tab[k] = std::polar(1.0, ang * static_cast<double>(k));
  }
  return tab;
}

void fft_pow2(std::span<cplx> a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const std::vector<cplx>& w = twiddles(n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx t = a[i + k + len / 2] * w[k * stride];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
}

// Core of Bluestein's algorithm: V_k = sum_j u_j exp(i*delta*j*k) for
// k = 0..kout-1, via jk = (j^2 + k^2 - (k-j)^2) / 2.
class CztCore {
 public:
  CztCore(std::size_t m, std::size_t kout, double delta) : m_(m), k_(kout) {
    pad_ = next_pow2(m_ + k_ - 1);
    chirp_in_.resize(m_);
    chirp_out_.resize(k_);
    for (std::size_t j = 0; j < m_; ++j)
      chirp_in_[j] = std::polar(1.0, 0.5 * delta * static_cast<double>(j) * static_cast<double>(j));
    for (std::size_t k = 0; k < k_; ++k)
      chirp_out_[k] = std::polar(1.0, 0.5 * delta * static_cast<double>(k) * static_cast<double>(k));
    // kernel b_d = exp(-i*delta*d^2/2) on d in [-(m-1), k-1], wrapped circularly
    kernel_fft_.assign(pad_, cplx(0.0, 0.0));
    for (std::ptrdiff_t d = -static_cast<std::ptrdiff_t>(m_) + 1;
         d < static_cast<std::ptrdiff_t>(k_); ++d) {
      const double dd = static_cast<double>(d);
      const std::size_t idx = static_cast<std::size_t>((d + static_cast<std::ptrdiff_t>(pad_)) %
                                                       static_cast<std::ptrdiff_t>(pad_));
      kernel_fft_[idx] = std::polar(1.0, -0.5 * delta * dd * dd);
    }
    fft_pow2(kernel_fft_, -1);
  }

  void apply(std::span<const cplx> in, std::span<cplx> out) const {
    std::vector<cplx> buf(pad_, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < m_; ++j) buf[j] = in[j] * chirp_in_[j];
    fft_pow2(buf, -1);
    for (std::size_t i = 0; i < pad_; ++i) buf[i] *= kernel_fft_[i];
    fft_pow2(buf, +1);
    const double inv = 1.0 / static_cast<double>(pad_);
    for (std::size_t k = 0; k < k_; ++k) out[k] = buf[k] * chirp_out_[k] * inv;
  }

 private:
  std::size_t m_, k_, pad_;
  std::vector<cplx> chirp_in_, chirp_out_, kernel_fft_;
};

}  // namespace

void dft(std::span<cplx> v, int sign) {
  const std::size_t n = v.size();
  if (n < 2) return;
  if (is_pow2(n)) {
    fft_pow2(v, sign);
    return;
  }
  const CztCore core(n, n, static_cast<double>(sign) * kTwoPi / static_cast<double>(n));
  std::vector<cplx> out(n);
  core.apply(v, out);
  std::copy(out.begin(), out.end(), v.begin());
}

ChirpZPlan::ChirpZPlan(double y0, double ystep, std::size_t m, double x0, double xstep,
                       std::size_t k, double sigma)
    : m_(m), k_(k) {
  // exp(i sigma x_k y_j) = exp(i sigma x0 y_j) * exp(i sigma k xstep y0)
  //                        * exp(i sigma xstep ystep j k)
  const double delta = sigma * xstep * ystep;
  pad_ = next_pow2(m_ + k_ - 1);
  pre_.resize(m_);
  post_.resize(k_);
  for (std::size_t j = 0; j < m_; ++j) {
    const double yj = y0 + static_cast<double>(j) * ystep;
    pre_[j] = std::polar(1.0, sigma * x0 * yj + 0.5 * delta * static_cast<double>(j) * static_cast<double>(j));
  }
  for (std::size_t kk = 0; kk < k_; ++kk) {
    const double dk = static_cast<double>(kk);
    post_[kk] = std::polar(1.0, sigma * dk * xstep * y0 + 0.5 * delta * dk * dk);
  }
  kernel_.assign(pad_, cplx(0.0, 0.0));
  for (std::ptrdiff_t d = -static_cast<std::ptrdiff_t>(m_) + 1;
       d < static_cast<std::ptrdiff_t>(k_); ++d) {
    const double dd = static_cast<double>(d);
    const std::size_t idx = static_cast<std::size_t>((d + static_cast<std::ptrdiff_t>(pad_)) %
                                                     static_cast<std::ptrdiff_t>(pad_));
    kernel_[idx] = std::polar(1.0, -0.5 * delta * dd * dd);
  }
  fft_pow2(kernel_, -1);
}

void ChirpZPlan::apply(std::span<const cplx> in, std::span<cplx> out) const {
  if (in.size() != m_ || out.size() != k_)
    throw std::invalid_argument("ChirpZPlan::apply: size mismatch");
  std::vector<cplx> buf(pad_, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < m_; ++j) buf[j] = in[j] * pre_[j];
  fft_pow2(buf, -1);
  for (std::size_t i = 0; i < pad_; ++i) buf[i] *= kernel_[i];
  fft_pow2(buf, +1);
  const double inv = 1.0 / static_cast<double>(pad_);
  for (std::size_t k = 0; k < k_; ++k) out[k] = buf[k] * post_[k] * inv;
}

namespace {

// One phase-corrected 1-D pass along dimension d. The DFT index product
// e^(i s 2pi jk/n) is the bare transform; the affine lattice offsets enter as
// the per-sample phases below, making the sum equal to
//   scale * step * sum_j f(y_j) exp(i s x_k y_j)
// on the conjugate lattice x_k.
void ft_pass(SampledField& f, std::size_t d, int sign) {
  const Axis in = f.axes[d];
  const Axis out = conjugate_axis(in);
  const std::size_t n = in.count;
  const double s = static_cast<double>(sign);
  const double scale = (sign < 0) ? in.step / kTwoPi : in.step;

  std::vector<cplx> pre(n), post(n);
  for (std::size_t j = 0; j < n; ++j)
    pre[j] = std::polar(1.0, s * out.min * in.coord(j));
  for (std::size_t k = 0; k < n; ++k)
    post[k] = std::polar(1.0, s * static_cast<double>(k) * out.step * in.min) * scale;

  std::vector<cplx> line(n);
  const std::size_t n_other = f.size() / n;
  const std::size_t stride = (f.dim() == 2 && d == 0) ? f.axes[1].count : 1;

  for (std::size_t r = 0; r < n_other; ++r) {
    // base index of this line
    const std::size_t base = (stride == 1) ? r * n : r;
    for (std::size_t j = 0; j < n; ++j) line[j] = f.data[base + j * stride] * pre[j];
    dft(line, sign);
    for (std::size_t k = 0; k < n; ++k) f.data[base + k * stride] = line[k] * post[k];
  }
  f.axes[d] = out;
}

}  // namespace

SampledField continuous_ft(const SampledField& f, std::span<const std::size_t> dims, int sign) {
  f.validate();
  if (dims.empty()) throw std::invalid_argument("continuous_ft: empty dim set");
  if (sign != 1 && sign != -1) throw std::invalid_argument("continuous_ft: sign must be +-1");
  for (std::size_t d : dims)
    if (d >= f.dim()) throw std::invalid_argument("continuous_ft: dim out of range");
  for (std::size_t i = 0; i + 1 < dims.size(); ++i)
    for (std::size_t j = i + 1; j < dims.size(); ++j)
      if (dims[i] == dims[j]) throw std::invalid_argument("continuous_ft: repeated dim");

  SampledField out = f;
  out.is_real_valued = false;
  out.is_hermitian_kernel = false;
  for (std::size_t d : dims) ft_pass(out, d, sign);
  return out;
}

SampledField partial_ft(const SampledField& f, std::span<const std::size_t> dims, int sign) {
  if (dims.empty()) throw std::invalid_argument("partial_ft: dim set must be nonempty");
  if (dims.size() >= f.dim())
    throw std::invalid_argument("partial_ft: dim set must be a strict subset (use continuous_ft)");
  return continuous_ft(f, dims, sign);
}

}  // namespace qtom
