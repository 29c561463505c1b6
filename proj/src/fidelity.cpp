#include "qtom/fidelity.hpp"

#include <cmath>

#include "qtom/fourier.hpp"

namespace qtom {

namespace {

constexpr double kImagResidueTol = 1e-8;

double real_cast(cplx z, const char* what) {
  if (std::abs(z.imag()) >= kImagResidueTol)
    throw numeric_error(std::string(what) + ": imaginary residue above 1e-8");
  return z.real();
}

struct Calibration {
  double constant;
  bool inv_two_pi;
};

double raw_char_overlap(const CharFunction& cf1, const CharFunction& cf2) {
  if (!cf1.x_axis().same_grid(cf2.x_axis()) || !cf1.y_axis().same_grid(cf2.y_axis()))
    throw std::invalid_argument("transition_char: axes mismatch");
  const std::size_t m = cf1.x_axis().count;
  std::vector<cplx> prod(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ir = (m - i) % m;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t jr = (m - j) % m;
      prod[i * m + j] = cf1.at(i, j) * cf2.at(ir, jr);
    }
  }
  const cplx sum = pairwise_sum(std::span<const cplx>(prod));
  return real_cast(sum * (cf1.x_axis().step * cf1.y_axis().step), "transition_char");
}

const Calibration& calibration() {
  static const Calibration cal = [] {
    const double measured = calibrate_char_overlap(10.0, 320);
    const double inv2pi = 1.0 / kTwoPi;
    Calibration c{};
    if (std::abs(measured - inv2pi) < 0.01 * inv2pi) {
      c.constant = inv2pi;
      c.inv_two_pi = true;
    } else if (std::abs(measured - 1.0) < 0.01) {
      c.constant = 1.0;
      c.inv_two_pi = false;
    } else {
      throw numeric_error("char overlap calibration is within 1% of neither 1 nor (2 pi)^-1");
    }
    return c;
  }();
  return cal;
}

}  // namespace

const char* to_string(TransitionRoute r) {
  switch (r) {
    case TransitionRoute::direct: return "direct";
    case TransitionRoute::characteristic: return "characteristic";
    case TransitionRoute::tomographic: return "tomographic";
  }
  return "?";
}

TransitionResult transition_direct(const DensityKernel& k1, const DensityKernel& k2) {
  if (!k1.q_axis.same_grid(k2.q_axis) || !k1.qprime_axis.same_grid(k2.qprime_axis))
    throw std::invalid_argument("transition_direct: axes mismatch");
  const std::size_t n = k1.q_axis.count;
  std::vector<cplx> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = k1.rho.at(i, j) * k2.rho.at(j, i);
  const cplx sum = pairwise_sum(std::span<const cplx>(prod)) *
                   (k1.q_axis.step * k1.qprime_axis.step);
  return {real_cast(sum, "transition_direct"), TransitionRoute::direct, 1.0};
}

TransitionResult transition_char(const CharFunction& cf1, const CharFunction& cf2) {
  const double c = char_overlap_normalization();
  return {c * raw_char_overlap(cf1, cf2), TransitionRoute::characteristic, c};
}

TransitionResult transition_tomographic(const Tomogram& t1, const Tomogram& t2) {
  if (!t1.x_axis.same_grid(t2.x_axis)) throw std::invalid_argument("transition_tomographic: x grids differ");
  if (t1.angles.size() != t2.angles.size())
    throw std::invalid_argument("transition_tomographic: angle grids differ");
  for (std::size_t a = 0; a < t1.angles.size(); ++a) {
    if (std::abs(t1.angles[a] - t2.angles[a]) > 1e-12)
      throw std::invalid_argument("transition_tomographic: angle grids differ");
    if (t1.angles[a] >= kPi)
      throw std::invalid_argument("transition_tomographic: angles must cover [0, pi)");
  }
  if (t1.angles.size() < 8) throw std::invalid_argument("transition_tomographic: fewer than 8 angles");

  const Axis x = t1.x_axis;
  const Axis lam = make_axis(2.0 * x.extent(), 2 * x.count);
  const ChirpZPlan plan(x.min, x.step, x.count, lam.min, lam.step, lam.count, +1.0);

  const std::size_t na = t1.angles.size();
  std::vector<cplx> in(x.count), g1(lam.count), g2(lam.count), terms(na);
  std::vector<cplx> lamsum(lam.count);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t i = 0; i < x.count; ++i) in[i] = t1.value(a, i);
    plan.apply(in, g1);
    for (std::size_t i = 0; i < x.count; ++i) in[i] = t2.value(a, i);
    plan.apply(in, g2);
    for (std::size_t l = 0; l < lam.count; ++l)
      lamsum[l] = std::abs(lam.coord(l)) * g1[l] * std::conj(g2[l]);
    terms[a] = pairwise_sum(std::span<const cplx>(lamsum)) * (x.step * x.step) * lam.step;
  }
  const cplx total = pairwise_sum(std::span<const cplx>(terms)) * (kPi / static_cast<double>(na));
  const double c = char_overlap_normalization();
  return {c * real_cast(total, "transition_tomographic"), TransitionRoute::tomographic, c};
}

double calibrate_char_overlap(double extent, std::size_t count) {
  const PureState vac = fock_state(0, make_axis(extent, count));
  const DensityKernel k = pure_kernel(vac);
  const CharFunction cf = char_from_kernel(k);
  const double direct = transition_direct(k, k).value;
  return direct / raw_char_overlap(cf, cf);
}

double char_overlap_normalization() { return calibration().constant; }

bool char_overlap_matches_inv_two_pi() { return calibration().inv_two_pi; }

}  // namespace qtom
