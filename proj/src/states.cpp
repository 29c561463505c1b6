#include "qtom/states.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace qtom {

namespace {

constexpr int kMaxFock = 60;
const double kQuarticRootPi = std::pow(kPi, -0.25);

WarningHandler& handler() {
  static WarningHandler h = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  return h;
}

void renormalize(PureState& s) {
  std::vector<double> sq(s.psi.size());
  for (std::size_t i = 0; i < s.psi.size(); ++i) sq[i] = std::norm(s.psi[i]);
  const double n2 = pairwise_sum(std::span<const double>(sq)) * s.axis.step;
  if (!(n2 > 0.0)) throw numeric_error("state has zero norm on this grid");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& z : s.psi) z *= inv;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler h) {
  WarningHandler old = handler();
  handler() = std::move(h);
  return old;
}

void emit_warning(const std::string& msg) { handler()(msg); }

double PureState::norm() const {
  std::vector<double> sq(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) sq[i] = std::norm(psi[i]);
  return std::sqrt(pairwise_sum(std::span<const double>(sq)) * axis.step);
}

SampledField PureState::as_field() const {
  SampledField f;
  f.axes = {axis};
  f.data = psi;
  return f;
}

cplx DensityKernel::trace() const {
  const std::size_t n = q_axis.count;
  std::vector<cplx> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = rho.at(i, i);
  return pairwise_sum(std::span<const cplx>(diag)) * q_axis.step;
}

PureState fock_state(int m, const Axis& axis) {
  if (m < 0) throw std::invalid_argument("fock_state: m must be >= 0");
  if (m > kMaxFock) throw std::invalid_argument("fock_state: m above recurrence stability bound 60");
  if (static_cast<double>(m) * axis.step * axis.step > 1.0)
    emit_warning("fock_state: grid too coarse to resolve this excitation (m*step^2 > 1)");

  const std::size_t n = axis.count;
  std::vector<double> prev(n, 0.0), cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = axis.coord(i);
    cur[i] = kQuarticRootPi * std::exp(-0.5 * q * q);
  }
  for (int k = 0; k < m; ++k) {
    const double a = std::sqrt(2.0 / (k + 1.0));
    const double b = std::sqrt(k / (k + 1.0));
    for (std::size_t i = 0; i < n; ++i) next[i] = a * axis.coord(i) * cur[i] - b * prev[i];
    prev.swap(cur);
    cur.swap(next);
  }
  PureState s;
  s.axis = axis;
  s.psi.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.psi[i] = cur[i];
  renormalize(s);
  return s;
}

PureState coherent_state(cplx alpha, const Axis& axis) {
  const double q0 = std::sqrt(2.0) * alpha.real();
  const double p0 = std::sqrt(2.0) * alpha.imag();
  if (std::sqrt(2.0) * std::abs(alpha) > 0.5 * axis.extent())
    emit_warning("coherent_state: displacement is a large fraction of the grid extent");

  // analytic probability mass beyond the grid (|psi|^2 is a unit Gaussian at q0)
  const double tail = 0.5 * (std::erfc(axis.max() - q0) + std::erfc(q0 - axis.min));
  if (tail > 1e-6)
    throw std::invalid_argument("coherent_state: state mass outside grid exceeds 1e-6");

  PureState s;
  s.axis = axis;
  s.psi.resize(axis.count);
  const double phase0 = -alpha.real() * alpha.imag();
  for (std::size_t i = 0; i < axis.count; ++i) {
    const double q = axis.coord(i);
    const double dq = q - q0;
    s.psi[i] = kQuarticRootPi * std::exp(-0.5 * dq * dq) * std::polar(1.0, p0 * q + phase0);
  }
  renormalize(s);
  return s;
}

PureState box_state(double halfwidth, const Axis& axis) {
  if (!(halfwidth > 0.0)) throw std::invalid_argument("box_state: halfwidth must be positive");
  if (halfwidth >= axis.extent())
    throw std::invalid_argument("box_state: halfwidth must be smaller than the grid extent");
  PureState s;
  s.axis = axis;
  s.psi.assign(axis.count, cplx(0.0, 0.0));
  const double v = 1.0 / std::sqrt(2.0 * halfwidth);
  // half-open support [-w, w): the quadrature norm is exactly 1 whenever
  // the halfwidth is a multiple of the step
  for (std::size_t i = 0; i < axis.count; ++i) {
    const double q = axis.coord(i);
    if (q >= -halfwidth && q < halfwidth) s.psi[i] = v;
  }
  renormalize(s);
  return s;
}

DensityKernel pure_kernel(const PureState& psi) {
  const std::size_t n = psi.axis.count;
  DensityKernel k;
  k.q_axis = psi.axis;
  k.qprime_axis = psi.axis;
  k.rho = SampledField::zeros({psi.axis, psi.axis});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k.rho.at(i, j) = psi.psi[i] * std::conj(psi.psi[j]);
  k.rho.verify_hermitian();
  k.hermitian = k.rho.is_hermitian_kernel;
  k.trace_hint = k.trace();
  return k;
}

DensityKernel mix(std::span<const std::pair<double, const DensityKernel*>> parts,
                  bool allow_signed) {
  if (parts.empty()) throw std::invalid_argument("mix: empty part list");
  const DensityKernel& first = *parts.front().second;
  DensityKernel out;
  out.q_axis = first.q_axis;
  out.qprime_axis = first.qprime_axis;
  out.rho = SampledField::zeros({first.q_axis, first.qprime_axis});
  out.trace_hint = 0.0;
  for (const auto& [w, kp] : parts) {
    if (w < 0.0 && !allow_signed) throw std::invalid_argument("mix: negative weight");
    const DensityKernel& k = *kp;
    if (!k.q_axis.same_grid(first.q_axis) || !k.qprime_axis.same_grid(first.qprime_axis))
      throw std::invalid_argument("mix: mismatched axes");
    for (std::size_t i = 0; i < out.rho.size(); ++i) out.rho.data[i] += w * k.rho.data[i];
    out.trace_hint += w * k.trace_hint;
  }
  out.rho.verify_hermitian();
  out.hermitian = out.rho.is_hermitian_kernel;
  return out;
}

DensityKernel mix(const std::vector<std::pair<double, DensityKernel>>& parts, bool allow_signed) {
  std::vector<std::pair<double, const DensityKernel*>> view;
  view.reserve(parts.size());
  for (const auto& [w, k] : parts) view.emplace_back(w, &k);
  return mix(std::span<const std::pair<double, const DensityKernel*>>(view), allow_signed);
}

}  // namespace qtom
