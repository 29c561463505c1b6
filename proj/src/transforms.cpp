#include "qtom/transforms.hpp"

#include <cmath>

#include "qtom/fourier.hpp"
#include "qtom/interp.hpp"

namespace qtom {

namespace {

constexpr double kSingularSin = 1e-6;

void require_state_axes(const DensityKernel& k) {
  if (!k.q_axis.same_grid(k.qprime_axis))
    throw std::invalid_argument("kernel axes mismatch");
  if (!k.q_axis.symmetric())
    throw std::invalid_argument("kernel axis must be the symmetric even-count grid");
}

void require_char_axes(const CharFunction& cf) {
  cf.field.validate();
  if (cf.field.dim() != 2 || !cf.x_axis().same_grid(cf.y_axis()))
    throw std::invalid_argument("char function axes mismatch");
  if (!cf.x_axis().symmetric())
    throw std::invalid_argument("char function axis must be the symmetric even-count grid");
}

// reverse-with-wrap realizes v(x) -> v(-x) on the DFT-symmetric grid
void parity_flip(std::span<cplx> v) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n - k; ++k) std::swap(v[k], v[n - k]);
}

void conj_all(std::span<cplx> v) {
  for (cplx& z : v) z = std::conj(z);
}

}  // namespace

// ---------------------------------------------------------------------------
// characteristic function <-> density kernel

CharFunction char_from_kernel(const DensityKernel& kernel) {
  require_state_axes(kernel);
  const Axis a = kernel.q_axis;
  const std::size_t n = a.count;
  const double h = a.step;
  const double ext = a.extent();

  // y on a step-2h grid so rho(t + y/2, t - y/2) is an exact re-indexing
  Axis yaxis;
  yaxis.min = -2.0 * ext;
  yaxis.step = 2.0 * h;
  yaxis.count = n;
  const Axis xaxis = make_axis(2.0 * ext, 2 * n);

  SampledField g = SampledField::zeros({a, yaxis});
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      const std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k + m) - half;
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(m) + half;
      if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(n) || j >= static_cast<std::ptrdiff_t>(n))
        continue;
      g.at(k, m) = kernel.rho.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }

  // f(x, y) = sum_t exp(+i x t) g(t, y) h, evaluated directly on the x lattice
  SampledField f = SampledField::zeros({xaxis, yaxis});
  const ChirpZPlan plan(a.min, h, n, xaxis.min, xaxis.step, 2 * n, +1.0);
  std::vector<cplx> col(n), out(2 * n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) col[k] = g.at(k, m);
    plan.apply(col, out);
    for (std::size_t k = 0; k < 2 * n; ++k) f.at(k, m) = out[k] * h;
  }

  // bring y to the same step-h lattice as x
  CharFunction cf{spectral_upsample(f, 1, 2)};
  return cf;
}

DensityKernel kernel_from_char(const CharFunction& cf) {
  require_char_axes(cf);
  const std::size_t m = cf.x_axis().count;  // = 2n
  const double h = cf.x_axis().step;
  const std::size_t n = m / 2;
  const double ext = cf.x_axis().extent() / 2.0;

  Axis a;  // state axis
  a.min = -ext;
  a.step = h;
  a.count = n;

  // s(t, y) = (2 pi)^-1 sum_x exp(-i x t) f(x, y) h on the half-step t lattice,
  // so that t = (q + q')/2 and y = q - q' land on exact nodes
  Axis taxis;
  taxis.min = -ext;
  taxis.step = 0.5 * h;
  taxis.count = m;

  std::vector<cplx> s(m * m);
  const ChirpZPlan plan(cf.x_axis().min, h, m, taxis.min, taxis.step, m, -1.0);
  std::vector<cplx> in(m), out(m);
  const double scale = h / kTwoPi;
  for (std::size_t iy = 0; iy < m; ++iy) {
    for (std::size_t ix = 0; ix < m; ++ix) in[ix] = cf.at(ix, iy);
    plan.apply(in, out);
    for (std::size_t r = 0; r < m; ++r) s[r * m + iy] = out[r] * scale;
  }

  DensityKernel k;
  k.q_axis = a;
  k.qprime_axis = a;
  k.rho = SampledField::zeros({a, a});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = i + j;                              // (q+q')/2 node
      const std::size_t l = static_cast<std::size_t>(
          static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j) +
          static_cast<std::ptrdiff_t>(n));                      // q-q' node
      k.rho.at(i, j) = s[r * m + l];
    }
  }
  k.rho.verify_hermitian();
  k.hermitian = k.rho.is_hermitian_kernel;
  k.trace_hint = k.trace();
  return k;
}

// ---------------------------------------------------------------------------
// Wigner function

// W = (2 pi)^-1 integral exp(-i(qx+py)) f dx dy. The e^{-i} pairing is the
// one under which the slice-transform and Radon tomogram routes define the
// same object for asymmetric states and the p-marginal at alpha = 0 is the
// position density.
WignerFunction wigner_from_char(const CharFunction& cf) {
  require_char_axes(cf);
  const std::size_t dims[] = {0, 1};
  SampledField w = continuous_ft(cf.field, dims, -1);
  for (cplx& z : w.data) z *= kTwoPi;
  w.verify_real(1e-9);
  return WignerFunction{std::move(w)};
}

CharFunction char_from_wigner(const WignerFunction& w) {
  w.field.validate();
  if (w.field.dim() != 2) throw std::invalid_argument("char_from_wigner: 2-D field required");
  const std::size_t dims[] = {0, 1};
  SampledField f = continuous_ft(w.field, dims, +1);
  const double pref = 1.0 / kTwoPi;
  for (cplx& z : f.data) z *= pref;
  return CharFunction{std::move(f)};
}

WignerFunction wigner_from_kernel(const DensityKernel& kernel) {
  return wigner_from_char(char_from_kernel(kernel));
}

// ---------------------------------------------------------------------------
// fractional Fourier transform

struct FrftOp::Stage {
  std::vector<cplx> chirp_in;   // exp(i cot q^2 / 2)
  std::vector<cplx> post;       // exp(i cot x^2 / 2) * h / sqrt(2 pi |sin|)
  ChirpZPlan plan;

  Stage(const Axis& axis, double angle)
      : plan(axis.min, axis.step, axis.count, axis.min, axis.step, axis.count,
             -1.0 / std::sin(angle)) {
    const double s = std::sin(angle);
    const double cot = std::cos(angle) / s;
    const double norm = axis.step / std::sqrt(kTwoPi * std::abs(s));
    chirp_in.resize(axis.count);
    post.resize(axis.count);
    for (std::size_t i = 0; i < axis.count; ++i) {
      const double q = axis.coord(i);
      chirp_in[i] = std::polar(1.0, 0.5 * cot * q * q);
      post[i] = std::polar(1.0, 0.5 * cot * q * q) * norm;
    }
  }
};

FrftOp::FrftOp(const Axis& axis, double alpha) : axis_(axis) {
  if (!axis.symmetric())
    throw std::invalid_argument("frft: symmetric even-count axis required");
  double a = std::fmod(alpha, kTwoPi);
  if (a < 0.0) a += kTwoPi;

  if (std::abs(std::sin(a)) < kSingularSin) {
    mode_ = (std::cos(a) > 0.0) ? Mode::identity : Mode::parity;
    return;
  }
  if (a > kPi) {
    // K_{a-2pi} = conj(K_{2pi-a}); phases are unconstrained and this keeps
    // apply_negative an exact elementwise conjugate
    conjugated_ = true;
    a = kTwoPi - a;
  }
  mode_ = Mode::chain;
  // direct chirp evaluation aliases when |cot| is large; route small and
  // near-pi angles through an exact quarter-turn first
  if (a >= 0.25 * kPi && a <= 0.75 * kPi) {
    stages_.emplace_back(axis, a);
  } else if (a < 0.25 * kPi) {
    stages_.emplace_back(axis, -0.5 * kPi);
    stages_.emplace_back(axis, a + 0.5 * kPi);
  } else {
    stages_.emplace_back(axis, 0.5 * kPi);
    stages_.emplace_back(axis, a - 0.5 * kPi);
  }
}

void FrftOp::run_chain(std::span<cplx> v) const {
  const std::size_t n = axis_.count;
  std::vector<cplx> buf(n), out(n);
  for (const Stage& st : stages_) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = v[i] * st.chirp_in[i];
    st.plan.apply(buf, out);
    for (std::size_t i = 0; i < n; ++i) v[i] = out[i] * st.post[i];
  }
}

void FrftOp::apply(std::span<cplx> v) const {
  if (v.size() != axis_.count) throw std::invalid_argument("FrftOp: length mismatch");
  switch (mode_) {
    case Mode::identity:
      return;
    case Mode::parity:
      parity_flip(v);
      return;
    case Mode::chain:
      if (conjugated_) {
        conj_all(v);
        run_chain(v);
        conj_all(v);
      } else {
        run_chain(v);
      }
      return;
  }
}

void FrftOp::apply_negative(std::span<cplx> v) const {
  conj_all(v);
  apply(v);
  conj_all(v);
}

PureState frft(const PureState& psi, double alpha) {
  const FrftOp op(psi.axis, alpha);
  PureState out;
  out.axis = psi.axis;
  out.psi = psi.psi;
  op.apply(out.psi);
  const double drift = std::abs(out.norm() - 1.0);
  if (drift > 1e-6)
    throw numeric_error("frft: unitarity drift above 1e-6; grid does not resolve the state");
  const double inv = 1.0 / out.norm();
  for (cplx& z : out.psi) z *= inv;
  return out;
}

DensityKernel rotate_kernel(const DensityKernel& kernel, double alpha) {
  require_state_axes(kernel);
  const FrftOp op(kernel.q_axis, alpha);
  const std::size_t n = kernel.q_axis.count;

  DensityKernel out = kernel;
  std::vector<cplx> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = out.rho.at(i, j);
    op.apply(col);
    for (std::size_t i = 0; i < n; ++i) out.rho.at(i, j) = col[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    op.apply_negative(std::span<cplx>(&out.rho.at(i, 0), n));

  out.rho.verify_hermitian();
  out.hermitian = out.rho.is_hermitian_kernel;
  out.trace_hint = out.trace();
  return out;
}

}  // namespace qtom
