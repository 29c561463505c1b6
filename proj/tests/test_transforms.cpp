#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qtom/sobolev.hpp"
#include "qtom/transforms.hpp"

using namespace qtom;

namespace {

const Axis kRig = make_axis(8.0, 256);

double sup_diff_vs(const SampledField& f, auto&& ref) {
  double sup = 0.0;
  for (std::size_t i = 0; i < f.count(0); ++i)
    for (std::size_t j = 0; j < f.count(1); ++j)
      sup = std::max(sup, std::abs(f.at(i, j) - ref(f.axes[0].coord(i), f.axes[1].coord(j))));
  return sup;
}

}  // namespace

TEST_CASE("char_from_kernel: vacuum closed form, origin value, zero kernel") {
  DensityKernel k = pure_kernel(fock_state(0, kRig));
  CharFunction cf = char_from_kernel(k);

  CHECK(cf.x_axis().same_grid(cf.y_axis()));
  CHECK(cf.x_axis().count == 512);
  CHECK(cf.x_axis().extent() == doctest::Approx(16.0));

  const double sup = sup_diff_vs(cf.field, [](double x, double y) {
    return cplx(std::exp(-0.25 * (x * x + y * y)), 0.0);
  });
  CHECK(sup < 1e-6);

  // f(0,0) = trace for a mixture as well
  DensityKernel mixk = mix({{0.4, pure_kernel(fock_state(1, kRig))},
                            {0.6, pure_kernel(fock_state(3, kRig))}});
  CharFunction cfm = char_from_kernel(mixk);
  CHECK(std::abs(cfm.at(256, 256) - cplx(1.0, 0.0)) < 1e-8);

  DensityKernel zero = k;
  for (auto& z : zero.rho.data) z = 0.0;
  zero.trace_hint = 0.0;
  CharFunction cfz = char_from_kernel(zero);
  CHECK(max_abs(cfz.field) == 0.0);
}

TEST_CASE("char hermitian symmetry: f(-x,-y) = conj f(x,y)") {
  DensityKernel k = pure_kernel(coherent_state(cplx(0.8, -0.4), kRig));
  CharFunction cf = char_from_kernel(k);
  const std::size_t m = cf.x_axis().count;
  double sup = 0.0;
  for (std::size_t i = 1; i < m; i += 3)
    for (std::size_t j = 1; j < m; j += 3)
      sup = std::max(sup, std::abs(cf.at(m - i, m - j) - std::conj(cf.at(i, j))));
  CHECK(sup < 1e-9);
}

TEST_CASE("kernel_from_char: Baker roundtrips and the zero field") {
  for (int m : {0, 3}) {
    DensityKernel k = pure_kernel(fock_state(m, kRig));
    DensityKernel back = kernel_from_char(char_from_kernel(k));
    CHECK(back.q_axis.same_grid(kRig));
    const double tol = (m == 0) ? 1e-6 : 1e-4;
    CHECK(rel_l2_diff(back.rho, k.rho) < tol);
    CHECK(back.hermitian);
  }

  CharFunction zero{SampledField::zeros({make_axis(16.0, 512), make_axis(16.0, 512)})};
  DensityKernel kz = kernel_from_char(zero);
  CHECK(max_abs(kz.rho) == 0.0);
}

TEST_CASE("wigner_from_char: vacuum closed form and trace normalization") {
  DensityKernel k = pure_kernel(fock_state(0, kRig));
  WignerFunction w = wigner_from_char(char_from_kernel(k));
  CHECK(w.field.is_real_valued);

  const double sup = sup_diff_vs(w.field, [](double q, double p) {
    return cplx(2.0 * std::exp(-(q * q + p * p)), 0.0);
  });
  CHECK(sup < 1e-6);

  CHECK(std::abs(integrate(w.field) - cplx(kTwoPi, 0.0)) < 1e-6);

  // integral of W stays 2 pi trace for excited and mixed states
  DensityKernel mixk = mix({{0.5, pure_kernel(fock_state(0, kRig))},
                            {0.5, pure_kernel(fock_state(2, kRig))}});
  WignerFunction wm = wigner_from_kernel(mixk);
  CHECK(std::abs(integrate(wm.field) - cplx(kTwoPi, 0.0)) < 1e-6);
}

TEST_CASE("wigner negativity witness: Fock-1 at the origin") {
  DensityKernel k = pure_kernel(fock_state(1, kRig));
  CharFunction cf = char_from_kernel(k);
  WignerFunction w = wigner_from_char(cf);

  // independent oracle: brute-force quadrature of the defining integral at (0,0)
  cplx brute = 0.0;
  for (const cplx& z : cf.field.data) brute += z;
  brute *= cell_volume(cf.field) / kTwoPi;
  CHECK(std::abs(brute - cplx(-2.0, 0.0)) < 1e-4);

  const std::size_t mid = w.q_axis().count / 2;
  CHECK(std::abs(w.at(mid, mid) - cplx(-2.0, 0.0)) < 1e-4);
  CHECK(std::abs(w.at(mid, mid) - brute) < 1e-10);
}

TEST_CASE("char_from_wigner: exact roundtrip on a random hermitian-symmetric field") {
  Axis c = make_axis(4.0, 64);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampledField raw = SampledField::zeros({c, c});
  for (auto& z : raw.data) z = cplx(u(rng), u(rng));
  // symmetrize: f(-x,-y) = conj f(x,y) with the periodic index reflection
  SampledField f = raw;
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j)
      f.at(i, j) = 0.5 * (raw.at(i, j) + std::conj(raw.at((64 - i) % 64, (64 - j) % 64)));
  CharFunction cf{f};
  CharFunction back = char_from_wigner(wigner_from_char(cf));
  CHECK(rel_l2_diff(back.field, cf.field) < 1e-12);

  // vacuum Wigner maps back to the Gaussian char function
  WignerFunction wv = wigner_from_kernel(pure_kernel(fock_state(0, kRig)));
  CharFunction cfv = char_from_wigner(wv);
  const double sup = sup_diff_vs(cfv.field, [](double x, double y) {
    return cplx(std::exp(-0.25 * (x * x + y * y)), 0.0);
  });
  CHECK(sup < 1e-6);

  WignerFunction wz{SampledField::zeros({c, c})};
  CHECK(max_abs(char_from_wigner(wz).field) == 0.0);
}

TEST_CASE("wigner_from_kernel is exactly the composition") {
  DensityKernel k = pure_kernel(fock_state(2, kRig));
  WignerFunction a = wigner_from_kernel(k);
  WignerFunction b = wigner_from_char(char_from_kernel(k));
  for (std::size_t i = 0; i < a.field.size(); ++i) CHECK(a.field.data[i] == b.field.data[i]);
}

TEST_CASE("frft: quarter turn fixes the vacuum, zero angle is identity") {
  PureState f0 = fock_state(0, kRig);
  PureState g = frft(f0, 0.5 * kPi);
  double sup = 0.0;
  for (std::size_t i = 0; i < kRig.count; ++i)
    sup = std::max(sup, std::abs(std::abs(g.psi[i]) - std::abs(f0.psi[i])));
  CHECK(sup < 1e-8);

  PureState id = frft(fock_state(3, kRig), 0.0);
  PureState f3 = fock_state(3, kRig);
  for (std::size_t i = 0; i < kRig.count; ++i) CHECK(id.psi[i] == f3.psi[i]);
}

TEST_CASE("frft: additivity up to a global phase") {
  PureState f2 = fock_state(2, kRig);
  PureState comp = frft(frft(f2, 0.4), 0.9);
  PureState direct = frft(f2, 1.3);
  double sup = 0.0;
  for (std::size_t i = 0; i < kRig.count; ++i)
    sup = std::max(sup, std::abs(std::abs(comp.psi[i]) - std::abs(direct.psi[i])));
  CHECK(sup < 1e-7);
}

TEST_CASE("frft: unitarity across angles, including small and reflex ones") {
  PureState s = coherent_state(cplx(0.7, 0.3), kRig);
  for (double a : {0.05, 0.4, 1.2, kPi / 2, 2.2, 3.0, 3.3, 4.7, 6.0}) {
    PureState g = frft(s, a);
    CHECK(std::abs(g.norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("frft: angle pi is the parity flip") {
  PureState f1 = fock_state(1, kRig);
  PureState g = frft(f1, kPi);
  for (std::size_t i = 1; i < kRig.count; ++i)
    CHECK(std::abs(g.psi[i] + f1.psi[i]) < 1e-12);  // psi_1 is odd
}

TEST_CASE("rotate_kernel: identity, vacuum invariance, trace invariance") {
  DensityKernel k0 = pure_kernel(fock_state(0, kRig));
  DensityKernel r0 = rotate_kernel(k0, 0.0);
  CHECK(rel_l2_diff(r0.rho, k0.rho) == 0.0);

  for (double a : {0.3, 1.1, 2.5}) {
    DensityKernel r = rotate_kernel(k0, a);
    CHECK(rel_l2_diff(r.rho, k0.rho) < 1e-7);
  }

  DensityKernel k2 = pure_kernel(fock_state(2, kRig));
  DensityKernel r2 = rotate_kernel(k2, 1.1);
  CHECK(std::abs(r2.trace() - cplx(1.0, 0.0)) < 1e-6);
  CHECK(r2.hermitian);
}

TEST_CASE("rotate_kernel of a pure state is the pure kernel of the rotated state") {
  PureState f2 = fock_state(2, kRig);
  const double a = 0.7;
  DensityKernel rot = rotate_kernel(pure_kernel(f2), a);
  PureState g = frft(f2, a);
  double sup = 0.0;
  for (std::size_t i = 0; i < kRig.count; ++i)
    sup = std::max(sup, std::abs(rot.rho.at(i, i).real() - std::norm(g.psi[i])));
  CHECK(sup < 1e-9);
}

TEST_CASE("regularity at nu = 2 survives the Baker map and its inverse") {
  DensityKernel k = pure_kernel(fock_state(2, kRig));
  CharFunction cf = char_from_kernel(k);
  DensityKernel back = kernel_from_char(cf);

  RegularityReport a = membership_report(k.rho, 2.0, 3);
  RegularityReport b = membership_report(cf.field, 2.0, 3);
  RegularityReport c = membership_report(back.rho, 2.0, 3);
  CHECK(a.verdict == RegularityVerdict::stable);
  CHECK(b.verdict == RegularityVerdict::stable);
  CHECK(c.verdict == RegularityVerdict::stable);
  CHECK(std::abs(a.growth_ratio - 1.0) < 0.05);
  CHECK(std::abs(b.growth_ratio - 1.0) < 0.05);
  CHECK(std::abs(c.growth_ratio - 1.0) < 0.05);
}
