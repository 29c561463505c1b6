#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qtom/fidelity.hpp"

using namespace qtom;

namespace {

const Axis kRig = make_axis(8.0, 256);

std::vector<DensityKernel> state_matrix() {
  std::vector<DensityKernel> m;
  for (int k = 0; k <= 3; ++k) m.push_back(pure_kernel(fock_state(k, kRig)));
  m.push_back(pure_kernel(coherent_state(0.5, kRig)));
  m.push_back(pure_kernel(coherent_state(1.0, kRig)));
  m.push_back(pure_kernel(coherent_state(cplx(1.0, 0.5), kRig)));
  m.push_back(mix({{0.5, m[0]}, {0.5, m[1]}}));
  m.push_back(mix({{0.3, m[0]}, {0.7, m[2]}}));
  m.push_back(mix({{0.25, m[1]}, {0.75, m[3]}}));
  return m;
}

}  // namespace

TEST_CASE("transition_direct: purity, orthogonality, coherent overlap") {
  DensityKernel k0 = pure_kernel(fock_state(0, kRig));
  DensityKernel k1 = pure_kernel(fock_state(1, kRig));
  DensityKernel kc = pure_kernel(coherent_state(1.0, kRig));

  CHECK(std::abs(transition_direct(k0, k0).value - 1.0) < 1e-9);
  CHECK(std::abs(transition_direct(k0, k1).value) < 1e-9);
  CHECK(std::abs(transition_direct(k0, kc).value - std::exp(-1.0)) < 1e-7);

  DensityKernel other = pure_kernel(fock_state(0, make_axis(8.0, 128)));
  CHECK_THROWS_AS(transition_direct(k0, other), std::invalid_argument);
}

TEST_CASE("transition_direct: mixture self-overlap equals the weight square sum") {
  DensityKernel km = mix({{0.3, pure_kernel(fock_state(0, kRig))},
                          {0.7, pure_kernel(fock_state(1, kRig))}});
  CHECK(std::abs(transition_direct(km, km).value - 0.58) < 1e-9);
}

TEST_CASE("calibration: constant matches (2 pi)^-1 and is grid-stable") {
  const double c1 = calibrate_char_overlap(8.0, 256);
  const double c2 = calibrate_char_overlap(11.0, 352);
  const double inv2pi = 1.0 / kTwoPi;
  CHECK(std::abs(c1 - inv2pi) < 0.01 * inv2pi);
  CHECK(std::abs(c1 / c2 - 1.0) < 1e-3);
  CHECK(char_overlap_matches_inv_two_pi());
  CHECK(char_overlap_normalization() == inv2pi);
}

TEST_CASE("transition_char: cross-route equality after calibration") {
  DensityKernel k0 = pure_kernel(fock_state(0, kRig));
  DensityKernel k1 = pure_kernel(fock_state(1, kRig));
  DensityKernel kc = pure_kernel(coherent_state(1.0, kRig));
  CharFunction c0 = char_from_kernel(k0);
  CharFunction c1 = char_from_kernel(k1);
  CharFunction cc = char_from_kernel(kc);

  CHECK(std::abs(transition_char(c0, cc).value - transition_direct(k0, kc).value) < 1e-6);
  CHECK(std::abs(transition_char(c0, c0).value - 1.0) < 1e-6);
  CHECK(std::abs(transition_char(c0, c1).value) < 1e-6);
  CHECK(transition_char(c0, c1).normalization_constant == 1.0 / kTwoPi);
}

TEST_CASE("transition_tomographic: vacuum, orthogonality, coherent overlap") {
  const auto angles = uniform_angles(64);
  DensityKernel k0 = pure_kernel(fock_state(0, kRig));
  DensityKernel k1 = pure_kernel(fock_state(1, kRig));
  DensityKernel kc = pure_kernel(coherent_state(1.0, kRig));
  Tomogram t0 = tomogram_from_char(char_from_kernel(k0), angles);
  Tomogram t1 = tomogram_from_char(char_from_kernel(k1), angles);
  Tomogram tc = tomogram_from_char(char_from_kernel(kc), angles);

  CHECK(std::abs(transition_tomographic(t0, t0).value - 1.0) < 1e-3);
  CHECK(std::abs(transition_tomographic(t0, t1).value) < 1e-3);
  CHECK(std::abs(transition_tomographic(t0, tc).value - std::exp(-1.0)) < 5e-3);

  Tomogram t8 = tomogram_from_char(char_from_kernel(k0), uniform_angles(4));
  CHECK_THROWS_AS(transition_tomographic(t8, t8), std::invalid_argument);
}

TEST_CASE("route agreement and symmetry across the state matrix") {
  const auto states = state_matrix();
  const auto angles = uniform_angles(64);
  std::vector<CharFunction> chars;
  std::vector<Tomogram> toms;
  for (const auto& k : states) {
    chars.push_back(char_from_kernel(k));
    toms.push_back(tomogram_from_char(chars.back(), angles));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i; j < states.size(); ++j) {
      const double d = transition_direct(states[i], states[j]).value;
      const double c = transition_char(chars[i], chars[j]).value;
      const double t = transition_tomographic(toms[i], toms[j]).value;
      CHECK(std::abs(d - c) < 1e-6);
      CHECK(std::abs(d - t) < 5e-3);
      // swap symmetry per route
      CHECK(std::abs(transition_direct(states[j], states[i]).value - d) < 1e-9);
      CHECK(std::abs(transition_char(chars[j], chars[i]).value - c) < 1e-9);
      CHECK(std::abs(transition_tomographic(toms[j], toms[i]).value - t) < 1e-9);
      // purity bound for unit-trace positive inputs
      CHECK(d >= 0.0 - 1e-6);
      CHECK(d <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("scalar homogeneity: scaling one argument scales every route") {
  const double c = 1.7;
  DensityKernel k1 = pure_kernel(fock_state(1, kRig));
  DensityKernel k2 = pure_kernel(coherent_state(0.5, kRig));
  DensityKernel k2s = k2;
  for (auto& z : k2s.rho.data) z *= c;
  k2s.trace_hint *= c;

  CHECK(transition_direct(k1, k2s).value == doctest::Approx(c * transition_direct(k1, k2).value).epsilon(1e-12));

  CharFunction c1 = char_from_kernel(k1);
  CharFunction c2 = char_from_kernel(k2);
  CharFunction c2s = char_from_kernel(k2s);
  CHECK(transition_char(c1, c2s).value ==
        doctest::Approx(c * transition_char(c1, c2).value).epsilon(1e-12));

  const auto angles = uniform_angles(16);
  Tomogram t1 = tomogram_from_char(c1, angles);
  Tomogram t2 = tomogram_from_char(c2, angles);
  Tomogram t2s = tomogram_from_char(c2s, angles);
  CHECK(transition_tomographic(t1, t2s).value ==
        doctest::Approx(c * transition_tomographic(t1, t2).value).epsilon(1e-12));
}
