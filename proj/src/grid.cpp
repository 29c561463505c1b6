#include "qtom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace qtom {

bool Axis::same_grid(const Axis& o, double tol) const {
  if (count != o.count) return false;
  const double scale = std::abs(step) + std::abs(min) + 1.0;
  return std::abs(min - o.min) <= tol * scale && std::abs(step - o.step) <= tol * scale;
}

bool Axis::symmetric(double tol) const {
  const double expected = -static_cast<double>(count / 2) * step;
  return count % 2 == 0 && std::abs(min - expected) < tol * (std::abs(min) + step);
}

Axis make_axis(double extent, std::size_t count) {
  if (!std::isfinite(extent) || extent <= 0.0)
    throw std::invalid_argument("make_axis: extent must be finite and positive");
  if (count < 2) throw std::invalid_argument("make_axis: count must be >= 2");
  Axis a;
  a.step = 2.0 * extent / static_cast<double>(count);
  a.min = -extent;
  a.count = count;
  return a;
}

Axis conjugate_axis(const Axis& a) {
  Axis c;
  c.count = a.count;
  c.step = kTwoPi / (static_cast<double>(a.count) * a.step);
  c.min = -static_cast<double>(a.count / 2) * c.step;
  return c;
}

SampledField SampledField::zeros(std::vector<Axis> axes) {
  SampledField f;
  f.axes = std::move(axes);
  std::size_t n = 1;
  for (const Axis& a : f.axes) n *= a.count;
  f.data.assign(n, cplx(0.0, 0.0));
  return f;
}

void SampledField::validate() const {
  if (axes.empty() || axes.size() > 2)
    throw std::invalid_argument("SampledField: expected 1 or 2 axes");
  std::size_t n = 1;
  for (const Axis& a : axes) {
    if (a.count < 2) throw std::invalid_argument("SampledField: axis count < 2");
    if (!(a.step > 0.0)) throw std::invalid_argument("SampledField: axis step <= 0");
    n *= a.count;
  }
  if (n != data.size())
    throw std::invalid_argument("SampledField: data length does not match axes");
}

double SampledField::verify_real(double tol) {
  double residue = 0.0;
  for (const cplx& z : data) residue = std::max(residue, std::abs(z.imag()));
  is_real_valued = residue < tol;
  return residue;
}

double SampledField::verify_hermitian(double tol) {
  if (dim() != 2 || axes[0].count != axes[1].count) {
    is_hermitian_kernel = false;
    return std::numeric_limits<double>::infinity();
  }
  const std::size_t n = axes[0].count;
  double residue = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      residue = std::max(residue, std::abs(at(i, j) - std::conj(at(j, i))));
  is_hermitian_kernel = residue < tol;
  return residue;
}

namespace {

template <class T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 32) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_impl(v.subspan(0, half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

cplx pairwise_sum(std::span<const cplx> v) { return pairwise_impl(v); }
double pairwise_sum(std::span<const double> v) { return pairwise_impl(v); }

double cell_volume(const SampledField& f) {
  double vol = 1.0;
  for (const Axis& a : f.axes) vol *= a.step;
  return vol;
}

cplx integrate(const SampledField& f) {
  if (f.data.empty()) throw std::invalid_argument("integrate: empty field");
  return pairwise_sum(std::span<const cplx>(f.data)) * cell_volume(f);
}

namespace {

// Fractional position of x on axis a, or nullopt-like flag via bool.
bool locate(const Axis& a, double x, std::size_t& i0, double& frac) {
  if (x < a.min || x > a.max()) return false;
  double u = (x - a.min) / a.step;
  double fl = std::floor(u);
  i0 = static_cast<std::size_t>(fl);
  if (i0 >= a.count - 1) {  // clamp the exact right endpoint
    i0 = a.count - 2;
    fl = static_cast<double>(i0);
  }
  frac = u - fl;
  return true;
}

}  // namespace

std::vector<cplx> resample(const SampledField& f, std::span<const double> points) {
  if (f.dim() != 1) throw std::invalid_argument("resample: 1-D points on non-1-D field");
  std::vector<cplx> out;
  out.reserve(points.size());
  for (double x : points) {
    std::size_t i;
    double t;
    if (!locate(f.axes[0], x, i, t)) {
      out.emplace_back(0.0, 0.0);
      continue;
    }
    out.push_back(f.at(i) * (1.0 - t) + f.at(i + 1) * t);
  }
  return out;
}

std::vector<cplx> resample(const SampledField& f, std::span<const std::array<double, 2>> points) {
  if (f.dim() != 2) throw std::invalid_argument("resample: 2-D points on non-2-D field");
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::size_t i, j;
    double u, v;
    if (!locate(f.axes[0], p[0], i, u) || !locate(f.axes[1], p[1], j, v)) {
      out.emplace_back(0.0, 0.0);
      continue;
    }
    out.push_back(f.at(i, j) * ((1.0 - u) * (1.0 - v)) + f.at(i, j + 1) * ((1.0 - u) * v) +
                  f.at(i + 1, j) * (u * (1.0 - v)) + f.at(i + 1, j + 1) * (u * v));
  }
  return out;
}

double l2_norm(const SampledField& f) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = std::norm(f.data[i]);
  return std::sqrt(pairwise_sum(std::span<const double>(sq)) * cell_volume(f));
}

double max_abs(const SampledField& f) {
  double m = 0.0;
  for (const cplx& z : f.data) m = std::max(m, std::abs(z));
  return m;
}

double rel_l2_diff(const SampledField& a, const SampledField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rel_l2_diff: size mismatch");
  std::vector<double> sq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sq[i] = std::norm(a.data[i] - b.data[i]);
  const double num = pairwise_sum(std::span<const double>(sq));
  for (std::size_t i = 0; i < a.size(); ++i) sq[i] = std::norm(b.data[i]);
  const double den = pairwise_sum(std::span<const double>(sq));
  return std::sqrt(num / den);
}

}  // namespace qtom
