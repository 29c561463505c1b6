#pragma once

#include "qtom/grid.hpp"
#include "qtom/states.hpp"

namespace qtom {

/// Characteristic function f(x, y) of a state. For a kernel on the symmetric
/// axis make_axis(E, N) the canonical char grid is make_axis(2E, 2N) in both
/// variables: same step, twice the extent, so y = q - q' is covered exactly
/// and the slowly decaying tails of excited states stay inside the box.
struct CharFunction {
  SampledField field;  // axes {x, y}

  const Axis& x_axis() const { return field.axes[0]; }
  const Axis& y_axis() const { return field.axes[1]; }
  cplx at(std::size_t ix, std::size_t iy) const { return field.at(ix, iy); }
};

/// Wigner function W(q, p) on the exact conjugate grid of the char axes,
/// which makes wigner_from_char / char_from_wigner exact discrete inverses.
struct WignerFunction {
  SampledField field;  // axes {q, p}

  const Axis& q_axis() const { return field.axes[0]; }
  const Axis& p_axis() const { return field.axes[1]; }
  cplx at(std::size_t iq, std::size_t ip) const { return field.at(iq, ip); }
};

/// f(x, y) = integral exp(i x t) rho(t + y/2, t - y/2) dt.
/// The change of variables is an exact re-indexing on the chosen lattices;
/// the transform over t is evaluated directly on the char x-lattice.
CharFunction char_from_kernel(const DensityKernel& kernel);

/// rho(q, q') = (2 pi)^-1 integral exp(-i x t) f(x, y) dx at
/// t = (q + q')/2, y = q - q'. Inverse of char_from_kernel.
DensityKernel kernel_from_char(const CharFunction& cf);

/// W(q, p) = (2 pi)^-1 integral exp(i (q x + p y)) f(x, y) dx dy.
/// With this prefactor the integral of W is 2 pi times the trace.
WignerFunction wigner_from_char(const CharFunction& cf);

/// Exact inverse of wigner_from_char (roundtrip is bit-level for any field).
CharFunction char_from_wigner(const WignerFunction& w);

/// Composition wigner_from_char(char_from_kernel(kernel)).
WignerFunction wigner_from_kernel(const DensityKernel& kernel);

/// Fractional Fourier transform of a wavefunction, evaluated on the state's
/// own axis. Near-singular angles (|sin a| < 1e-6) snap to the identity or
/// the parity flip; output global phase is unconstrained. The result is
/// renormalized; a norm drift above 1e-6 raises numeric_error.
PureState frft(const PureState& psi, double alpha);

/// Reusable fractional-FT machinery for one axis and angle. apply_negative
/// is the exact elementwise conjugate of apply, so phases cancel in
/// kernel rotations.
class FrftOp {
 public:
  FrftOp(const Axis& axis, double alpha);
  void apply(std::span<cplx> v) const;
  void apply_negative(std::span<cplx> v) const;

 private:
  struct Stage;
  enum class Mode { identity, parity, chain };
  Mode mode_ = Mode::identity;
  bool conjugated_ = false;  // angle was in (pi, 2 pi): run as conj o chain o conj
  Axis axis_;
  std::vector<Stage> stages_;
  void run_chain(std::span<cplx> v) const;
};

/// rho_a(x, x') obtained by the fractional FT in the first argument with +a
/// and in the second with -a. Unitary: trace and hermiticity preserved.
DensityKernel rotate_kernel(const DensityKernel& kernel, double alpha);

}  // namespace qtom
