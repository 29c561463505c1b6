#include "qtom/tomography.hpp"

#include <algorithm>
#include <cmath>

#include "qtom/fourier.hpp"
#include "qtom/interp.hpp"

namespace qtom {

namespace {

constexpr double kImagResidueTol = 1e-8;
constexpr std::size_t kRadonUpsample = 4;

void require_angles(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("tomogram: empty angle list");
  if (!std::is_sorted(angles.begin(), angles.end()))
    throw std::invalid_argument("tomogram: angle list must be sorted");
  for (double a : angles)
    if (a < 0.0 || a > kTwoPi + 1e-12)
      throw std::invalid_argument("tomogram: angles must lie in [0, 2 pi]");
}

// state axis matching the canonical char grid make_axis(2E, 2N)
Axis state_axis_from_char(const Axis& cf_axis) {
  Axis a;
  a.step = cf_axis.step;
  a.count = cf_axis.count / 2;
  a.min = -0.5 * cf_axis.extent();
  return a;
}

void real_cast_row(std::span<const cplx> src, std::span<double> dst) {
  double residue = 0.0;
  for (const cplx& z : src) residue = std::max(residue, std::abs(z.imag()));
  if (residue >= kImagResidueTol)
    throw numeric_error("tomogram: imaginary residue above 1e-8 before real cast");
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i].real();
}

}  // namespace

std::size_t Tomogram::angle_index(double alpha, double tol) const {
  for (std::size_t a = 0; a < angles.size(); ++a)
    if (std::abs(angles[a] - alpha) < tol) return a;
  throw std::invalid_argument("tomogram: angle not present");
}

std::vector<double> uniform_angles(std::size_t k) {
  if (k == 0) throw std::invalid_argument("uniform_angles: k must be positive");
  std::vector<double> a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = kPi * static_cast<double>(i) / static_cast<double>(k);
  return a;
}

CharSampler::CharSampler(const CharFunction& cf) {
  cf.field.validate();
  if (cf.field.dim() != 2 || !cf.x_axis().same_grid(cf.y_axis()))
    throw std::invalid_argument("CharSampler: square symmetric char grid required");
  t_axis_ = cf.x_axis();
  interp_ = std::make_shared<SpectralInterpolant>(cf.field, kRadonUpsample);
}

RadialSlice CharSampler::slice(double alpha) const {
  RadialSlice s;
  s.angle = alpha;
  s.t_axis = t_axis_;
  s.values.resize(t_axis_.count);
  const double c = std::cos(alpha), sn = std::sin(alpha);
  for (std::size_t j = 0; j < t_axis_.count; ++j) {
    const double t = t_axis_.coord(j);
    s.values[j] = (*interp_)(t * c, t * sn);
  }
  return s;
}

RadialSlice slice_char(const CharFunction& cf, double alpha) {
  return CharSampler(cf).slice(alpha);
}

Tomogram tomogram_from_char(const CharFunction& cf, std::span<const double> angles) {
  require_angles(angles);
  const CharSampler sampler(cf);
  const Axis x = state_axis_from_char(cf.x_axis());
  const Axis t = cf.x_axis();

  Tomogram tom;
  tom.x_axis = x;
  tom.angles.assign(angles.begin(), angles.end());
  tom.omega.resize(angles.size() * x.count);

  const ChirpZPlan plan(t.min, t.step, t.count, x.min, x.step, x.count, -1.0);
  const double scale = t.step / kTwoPi;
  std::vector<cplx> row(x.count);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    RadialSlice s = sampler.slice(angles[a]);
    plan.apply(s.values, row);
    for (cplx& z : row) z *= scale;
    real_cast_row(row, std::span<double>(&tom.value(a, 0), x.count));
  }
  return tom;
}

Tomogram tomogram_from_wigner(const WignerFunction& w, std::span<const double> angles) {
  require_angles(angles);
  w.field.validate();
  if (w.field.dim() != 2 || !w.q_axis().same_grid(w.p_axis()))
    throw std::invalid_argument("tomogram_from_wigner: square symmetric Wigner grid required");

  // x axis of the state whose canonical char grid is conjugate to this one
  const Axis x = state_axis_from_char(conjugate_axis(w.q_axis()));
  const Axis line = w.q_axis();  // integration lattice along the rotated row

  const SpectralInterpolant interp(w.field, kRadonUpsample);

  Tomogram tom;
  tom.x_axis = x;
  tom.angles.assign(angles.begin(), angles.end());
  tom.omega.resize(angles.size() * x.count);

  const double scale = line.step / kTwoPi;
  std::vector<cplx> row(x.count);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const double c = std::cos(angles[a]), sn = std::sin(angles[a]);
    for (std::size_t i = 0; i < x.count; ++i) {
      const double xv = x.coord(i);
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < line.count; ++j) {
        const double s = line.coord(j);
        acc += interp(xv * c - s * sn, xv * sn + s * c);
      }
      row[i] = acc * scale;
    }
    real_cast_row(row, std::span<double>(&tom.value(a, 0), x.count));
  }
  return tom;
}

Tomogram tomogram_from_rotated_kernel(const DensityKernel& kernel,
                                      std::span<const double> angles) {
  require_angles(angles);
  const Axis x = kernel.q_axis;

  Tomogram tom;
  tom.x_axis = x;
  tom.angles.assign(angles.begin(), angles.end());
  tom.omega.resize(angles.size() * x.count);

  std::vector<cplx> diag(x.count);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const DensityKernel rot = rotate_kernel(kernel, angles[a]);
    for (std::size_t i = 0; i < x.count; ++i) diag[i] = rot.rho.at(i, i);
    real_cast_row(diag, std::span<double>(&tom.value(a, 0), x.count));
  }
  return tom;
}

RadialSlice char_slice_from_tomogram(const Tomogram& tom, double alpha) {
  const std::size_t a = tom.angle_index(alpha);
  const Axis x = tom.x_axis;
  const Axis lam = make_axis(2.0 * x.extent(), 2 * x.count);  // canonical char lattice

  RadialSlice s;
  s.angle = alpha;
  s.t_axis = lam;
  s.values.resize(lam.count);
  const ChirpZPlan plan(x.min, x.step, x.count, lam.min, lam.step, lam.count, +1.0);
  std::vector<cplx> in(x.count);
  for (std::size_t i = 0; i < x.count; ++i) in[i] = tom.value(a, i);
  plan.apply(in, s.values);
  for (cplx& z : s.values) z *= x.step;
  return s;
}

namespace {

cplx linear_on_slice(const std::vector<cplx>& vals, const Axis& lam, double l) {
  if (l < lam.min || l > lam.max()) return cplx(0.0, 0.0);
  double u = (l - lam.min) / lam.step;
  double fl = std::floor(u);
  std::size_t i = static_cast<std::size_t>(fl);
  if (i >= lam.count - 1) {
    i = lam.count - 2;
    fl = static_cast<double>(i);
  }
  const double t = u - fl;
  return vals[i] * (1.0 - t) + vals[i + 1] * t;
}

}  // namespace

CharFunction char_from_tomogram(const Tomogram& tom) {
  std::vector<std::size_t> used;
  for (std::size_t a = 0; a < tom.angle_count(); ++a)
    if (tom.angles[a] < kPi - 1e-12) used.push_back(a);
  if (used.size() < 4)
    throw std::invalid_argument("char_from_tomogram: need at least 4 angles in [0, pi)");

  const Axis lam = make_axis(2.0 * tom.x_axis.extent(), 2 * tom.x_axis.count);
  std::vector<std::vector<cplx>> slices(used.size());
  std::vector<double> ang(used.size());
  for (std::size_t k = 0; k < used.size(); ++k) {
    ang[k] = tom.angles[used[k]];
    slices[k] = char_slice_from_tomogram(tom, ang[k]).values;
  }

  SampledField f = SampledField::zeros({lam, lam});
  const double disk = lam.extent();
  for (std::size_t ix = 0; ix < lam.count; ++ix) {
    const double xv = lam.coord(ix);
    for (std::size_t iy = 0; iy < lam.count; ++iy) {
      const double yv = lam.coord(iy);
      const double r = std::hypot(xv, yv);
      if (r > disk) continue;
      // signed radius maps the full plane onto angles in [0, pi)
      double alpha, l;
      if (yv > 0.0) {
        alpha = std::atan2(yv, xv);
        l = r;
      } else if (yv < 0.0) {
        alpha = std::atan2(-yv, -xv);
        l = -r;
      } else {
        alpha = 0.0;
        l = xv;
      }
      if (alpha >= kPi) alpha = 0.0;  // atan2(+0, -x) returns pi exactly

      // bracketing slices; the wrap slice at ang[0] + pi is the reflected first one
      const auto it = std::upper_bound(ang.begin(), ang.end(), alpha);
      cplx lo_val, hi_val;
      double lo_a, hi_a;
      if (it == ang.begin()) {
        lo_a = ang.back() - kPi;
        hi_a = ang.front();
        lo_val = linear_on_slice(slices.back(), lam, -l);
        hi_val = linear_on_slice(slices.front(), lam, l);
      } else if (it == ang.end()) {
        lo_a = ang.back();
        hi_a = ang.front() + kPi;
        lo_val = linear_on_slice(slices.back(), lam, l);
        hi_val = linear_on_slice(slices.front(), lam, -l);
      } else {
        const std::size_t hi = static_cast<std::size_t>(it - ang.begin());
        lo_a = ang[hi - 1];
        hi_a = ang[hi];
        lo_val = linear_on_slice(slices[hi - 1], lam, l);
        hi_val = linear_on_slice(slices[hi], lam, l);
      }
      const double span = hi_a - lo_a;
      const double whi = (span > 0.0) ? (alpha - lo_a) / span : 0.0;
      f.at(ix, iy) = lo_val * (1.0 - whi) + hi_val * whi;
    }
  }
  return CharFunction{std::move(f)};
}

DensityKernel kernel_from_tomogram(const Tomogram& tom) {
  return kernel_from_char(char_from_tomogram(tom));
}

}  // namespace qtom
