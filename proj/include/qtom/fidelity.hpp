#pragma once

#include "qtom/tomography.hpp"

namespace qtom {

enum class TransitionRoute { direct, characteristic, tomographic };

const char* to_string(TransitionRoute r);

/// Hilbert-Schmidt overlap Tr(rho1 rho2) and the route that produced it.
struct TransitionResult {
  double value = 0.0;
  TransitionRoute route = TransitionRoute::direct;
  double normalization_constant = 1.0;
};

/// integral rho1(q, q') rho2(q', q) dq dq'.
TransitionResult transition_direct(const DensityKernel& k1, const DensityKernel& k2);

/// Calibrated overlap of characteristic functions:
/// normalization * integral f1(x, y) f2(-x, -y) dx dy.
TransitionResult transition_char(const CharFunction& cf1, const CharFunction& cf2);

/// Calibrated tomographic overlap over angles in [0, pi) (at least 8):
/// normalization * integral da dl |l| g1(l, a) conj(g2(l, a)),
/// where g_i are the Fourier transforms of the tomogram rows.
TransitionResult transition_tomographic(const Tomogram& t1, const Tomogram& t2);

/// Raw calibration at the given resolution: transition_direct / raw integral
/// on the vacuum-vs-vacuum pair.
double calibrate_char_overlap(double extent, std::size_t count);

/// The frozen normalization constant. Calibrated once at high resolution and
/// snapped to whichever of 1 and (2 pi)^-1 the measurement lands on (within
/// 1 percent); out-of-band measurements raise numeric_error.
double char_overlap_normalization();

/// True when the calibration matched (2 pi)^-1 rather than 1.
bool char_overlap_matches_inv_two_pi();

}  // namespace qtom
