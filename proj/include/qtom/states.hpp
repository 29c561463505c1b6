#pragma once

#include <functional>
#include <utility>

#include "qtom/grid.hpp"

namespace qtom {

/// Normalized position-space wavefunction on a symmetric grid.
/// Constructors renormalize on the grid so the discrete norm is exactly 1.
struct PureState {
  Axis axis;
  std::vector<cplx> psi;

  double norm() const;
  SampledField as_field() const;
};

/// Position-representation kernel rho(q, q') of a Hilbert-Schmidt operator.
/// Positivity is deliberately not enforced.
struct DensityKernel {
  Axis q_axis;
  Axis qprime_axis;
  SampledField rho;  // 2-D, axes {q, q'}
  cplx trace_hint = 0.0;
  bool hermitian = false;

  /// Integral of the diagonal rho(q, q).
  cplx trace() const;
};

/// Warnings from state constructors (grid marginal for the requested state).
/// Default handler writes to stderr; tests may replace it.
using WarningHandler = std::function<void(const std::string&)>;
WarningHandler set_warning_handler(WarningHandler h);
void emit_warning(const std::string& msg);

/// Harmonic-oscillator eigenstate m via the stable Hermite-function
/// recurrence psi_{m+1} = sqrt(2/(m+1)) q psi_m - sqrt(m/(m+1)) psi_{m-1}.
PureState fock_state(int m, const Axis& axis);

/// psi_alpha(q) = pi^-1/4 exp(-(q - sqrt2 Re a)^2/2 + i sqrt2 (Im a) q - i Re a Im a).
PureState coherent_state(cplx alpha, const Axis& axis);

/// Flat normalized state on |q| <= halfwidth; deliberately non-smooth.
PureState box_state(double halfwidth, const Axis& axis);

/// rho(q, q') = psi(q) conj(psi(q')).
DensityKernel pure_kernel(const PureState& psi);

/// Weighted sum of kernels on identical axes. Negative weights require
/// allow_signed (positivity of states is waived, convexity is the default).
DensityKernel mix(std::span<const std::pair<double, const DensityKernel*>> parts,
                  bool allow_signed = false);
DensityKernel mix(const std::vector<std::pair<double, DensityKernel>>& parts,
                  bool allow_signed = false);

}  // namespace qtom
