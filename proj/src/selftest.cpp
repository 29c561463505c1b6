#include "qtom/selftest.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qtom/fidelity.hpp"
#include "qtom/fourier.hpp"
#include "qtom/io.hpp"
#include "qtom/sobolev.hpp"

namespace qtom {

namespace {

const Axis kRig = make_axis(8.0, 256);

struct Check {
  std::ostream& os;
  int failures = 0;

  void criterion(int id, const char* name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    os << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) os << "  (" << detail << ")";
    os << "\n";
    if (!ok) ++failures;
  }
};

double tomo_sup_diff(const Tomogram& a, const Tomogram& b) {
  double sup = 0.0;
  for (std::size_t i = 0; i < a.omega.size(); ++i)
    sup = std::max(sup, std::abs(a.omega[i] - b.omega[i]));
  return sup;
}

double row_integral(const Tomogram& t, std::size_t a) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.x_axis.count; ++i) s += t.value(a, i);
  return s * t.x_axis.step;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

bool c1_ft_infrastructure(std::string& detail) {
  // roundtrip on data with no special structure
  Axis a = make_axis(7.0, 224);
  SampledField f = SampledField::zeros({a});
  unsigned s = 12345u;
  auto next = [&s]() {
    s = 1664525u * s + 1013904223u;
    return static_cast<double>(s) / 4294967296.0 - 0.5;
  };
  for (auto& z : f.data) z = cplx(next(), next());
  const std::size_t dims[] = {0};
  const double rt = rel_l2_diff(continuous_ft(continuous_ft(f, dims, -1), dims, +1), f);

  // Plancherel on a decaying field
  SampledField g = SampledField::zeros({a});
  for (std::size_t i = 0; i < a.count; ++i) {
    const double q = a.coord(i);
    g.at(i) = cplx(next(), next()) * std::exp(-0.2 * q * q);
  }
  SampledField gt = continuous_ft(g, dims, -1);
  double lhs = 0.0, rhs = 0.0;
  for (const cplx& z : gt.data) lhs += std::norm(z);
  for (const cplx& z : g.data) rhs += std::norm(z);
  lhs *= kTwoPi * gt.axes[0].step;
  rhs *= a.step;
  const double planch = std::abs(lhs - rhs) / rhs;

  // translation phase law, shift by an exact grid step multiple
  Axis b = make_axis(8.0, 256);
  SampledField h = SampledField::zeros({b});
  for (std::size_t i = 0; i < b.count; ++i) {
    const double q = b.coord(i);
    h.at(i) = std::exp(-q * q) * cplx(std::cos(1.5 * q), 0.25);
  }
  const std::size_t shift = 16;
  const double da = shift * b.step;
  SampledField hs = SampledField::zeros({b});
  for (std::size_t i = shift; i < b.count; ++i) hs.at(i) = h.at(i - shift);
  SampledField H = continuous_ft(h, dims, -1);
  SampledField Hs = continuous_ft(hs, dims, -1);
  double trans = 0.0;
  for (std::size_t i = 0; i < b.count; ++i) {
    const double x = H.axes[0].coord(i);
    trans = std::max(trans, std::abs(Hs.at(i) - std::polar(1.0, -da * x) * H.at(i)));
  }

  detail = "roundtrip " + fmt(rt) + ", plancherel " + fmt(planch) + ", translation " + fmt(trans);
  return rt < 1e-12 && planch < 1e-10 && trans < 1e-10;
}

bool c2_baker_roundtrip(std::string& detail) {
  double worst = 0.0;
  for (int m = 0; m <= 3; ++m) {
    DensityKernel k = pure_kernel(fock_state(m, kRig));
    worst = std::max(worst, rel_l2_diff(kernel_from_char(char_from_kernel(k)).rho, k.rho));
  }
  for (cplx alpha : {cplx(0.5, 0.0), cplx(1.0, 0.5)}) {
    DensityKernel k = pure_kernel(coherent_state(alpha, kRig));
    worst = std::max(worst, rel_l2_diff(kernel_from_char(char_from_kernel(k)).rho, k.rho));
  }
  detail = "worst rel L2 " + fmt(worst);
  return worst < 1e-6;
}

bool c3_route_equivalence(std::string& detail) {
  const auto angles = uniform_angles(64);
  std::vector<DensityKernel> family;
  for (int m = 0; m <= 5; ++m) family.push_back(pure_kernel(fock_state(m, kRig)));
  family.push_back(pure_kernel(coherent_state(1.0, kRig)));
  family.push_back(mix({{0.5, pure_kernel(fock_state(0, kRig))},
                        {0.5, pure_kernel(fock_state(2, kRig))}}));

  double worst_pair = 0.0, worst_norm = 0.0;
  for (const DensityKernel& k : family) {
    CharFunction cf = char_from_kernel(k);
    Tomogram tc = tomogram_from_char(cf, angles);
    Tomogram tw = tomogram_from_wigner(wigner_from_char(cf), angles);
    Tomogram tr = tomogram_from_rotated_kernel(k, angles);
    worst_pair = std::max({worst_pair, tomo_sup_diff(tc, tw), tomo_sup_diff(tc, tr),
                           tomo_sup_diff(tw, tr)});
    for (std::size_t a = 0; a < tc.angle_count(); ++a)
      worst_norm = std::max(worst_norm, std::abs(row_integral(tc, a) - 1.0));
  }

  // angle symmetry on a paired angle list
  std::vector<double> paired;
  for (double a : {0.0, 0.35, 1.1, 2.6}) {
    paired.push_back(a);
    paired.push_back(a + kPi);
  }
  std::sort(paired.begin(), paired.end());
  double worst_sym = 0.0;
  for (const DensityKernel* k : {&family[3], &family[6], &family[7]}) {
    Tomogram t = tomogram_from_char(char_from_kernel(*k), paired);
    const std::size_t n = t.x_axis.count;
    for (double a : {0.0, 0.35, 1.1, 2.6}) {
      const std::size_t ia = t.angle_index(a), ib = t.angle_index(a + kPi);
      for (std::size_t i = 1; i < n; ++i)
        worst_sym = std::max(worst_sym, std::abs(t.value(ib, i) - t.value(ia, n - i)));
    }
  }

  detail = "pairwise " + fmt(worst_pair) + ", normalization " + fmt(worst_norm) +
           ", angle symmetry " + fmt(worst_sym);
  return worst_pair < 1e-3 && worst_norm < 1e-6 && worst_sym < 1e-6;
}

bool c4_pure_state_tomograms(std::string& detail) {
  const auto angles = uniform_angles(8);
  double worst = 0.0;
  for (int m = 0; m <= 3; ++m) {
    PureState psi = fock_state(m, kRig);
    Tomogram t = tomogram_from_rotated_kernel(pure_kernel(psi), angles);
    for (std::size_t a = 0; a < angles.size(); ++a) {
      PureState rot = frft(psi, angles[a]);
      for (std::size_t i = 0; i < kRig.count; ++i)
        worst = std::max(worst, std::abs(t.value(a, i) - std::norm(rot.psi[i])));
    }
  }
  detail = "sup diff " + fmt(worst);
  return worst < 1e-6;
}

bool c5_gaussian_oracles(std::string& detail) {
  DensityKernel k0 = pure_kernel(fock_state(0, kRig));
  CharFunction cf0 = char_from_kernel(k0);

  Tomogram t = tomogram_from_char(cf0, uniform_angles(16));
  double tom_err = 0.0;
  for (std::size_t a = 0; a < t.angle_count(); ++a)
    for (std::size_t i = 0; i < t.x_axis.count; ++i) {
      const double x = t.x_axis.coord(i);
      tom_err = std::max(tom_err, std::abs(t.value(a, i) - std::exp(-x * x) / std::sqrt(kPi)));
    }

  WignerFunction w = wigner_from_char(cf0);
  double wig_err = 0.0;
  for (std::size_t i = 0; i < w.q_axis().count; ++i)
    for (std::size_t j = 0; j < w.p_axis().count; ++j) {
      const double q = w.q_axis().coord(i), p = w.p_axis().coord(j);
      wig_err = std::max(wig_err, std::abs(w.at(i, j) - 2.0 * std::exp(-(q * q + p * p))));
    }

  double mass_err = 0.0;
  std::vector<DensityKernel> family;
  family.push_back(k0);
  family.push_back(pure_kernel(fock_state(4, kRig)));
  family.push_back(pure_kernel(coherent_state(cplx(0.5, 0.5), kRig)));
  family.push_back(mix({{0.25, pure_kernel(fock_state(1, kRig))},
                        {0.75, pure_kernel(fock_state(3, kRig))}}));
  for (const DensityKernel& k : family) {
    WignerFunction wk = wigner_from_kernel(k);
    mass_err = std::max(mass_err, std::abs(integrate(wk.field) - cplx(kTwoPi, 0.0)));
  }

  detail = "tomogram " + fmt(tom_err) + ", wigner " + fmt(wig_err) + ", mass " + fmt(mass_err);
  return tom_err < 1e-6 && wig_err < 1e-6 && mass_err < 1e-6;
}

bool c6_reconstruction(std::string& detail) {
  const auto angles = uniform_angles(64);
  double worst = 0.0, trace_err = 0.0;
  std::vector<DensityKernel> family;
  for (int m = 0; m <= 3; ++m) family.push_back(pure_kernel(fock_state(m, kRig)));
  family.push_back(mix({{0.5, pure_kernel(fock_state(0, kRig))},
                        {0.5, pure_kernel(fock_state(1, kRig))}}));
  for (const DensityKernel& k : family) {
    Tomogram t = tomogram_from_char(char_from_kernel(k), angles);
    DensityKernel rec = kernel_from_tomogram(t);
    worst = std::max(worst, rel_l2_diff(rec.rho, k.rho));
    trace_err = std::max(trace_err, std::abs(rec.trace() - cplx(1.0, 0.0)));
  }
  detail = "worst rel L2 " + fmt(worst) + ", trace " + fmt(trace_err);
  return worst < 1e-2 && trace_err < 1e-3;
}

bool c7_transition_probabilities(std::string& detail) {
  const double inv2pi = 1.0 / kTwoPi;
  const double cal_a = calibrate_char_overlap(10.0, 320);
  const double cal_b = calibrate_char_overlap(10.0 * std::sqrt(2.0), 640);
  const bool cal_ok = std::abs(cal_a - inv2pi) < 0.01 * inv2pi &&
                      std::abs(cal_a / cal_b - 1.0) < 1e-3;

  std::vector<DensityKernel> m;
  for (int k = 0; k <= 3; ++k) m.push_back(pure_kernel(fock_state(k, kRig)));
  m.push_back(pure_kernel(coherent_state(0.5, kRig)));
  m.push_back(pure_kernel(coherent_state(1.0, kRig)));
  m.push_back(pure_kernel(coherent_state(cplx(1.0, 0.5), kRig)));
  m.push_back(mix({{0.5, m[0]}, {0.5, m[1]}}));
  m.push_back(mix({{0.3, m[0]}, {0.7, m[2]}}));
  m.push_back(mix({{0.25, m[1]}, {0.75, m[3]}}));

  const auto angles = uniform_angles(64);
  std::vector<CharFunction> chars;
  std::vector<Tomogram> toms;
  for (const auto& k : m) {
    chars.push_back(char_from_kernel(k));
    toms.push_back(tomogram_from_char(chars.back(), angles));
  }
  double dc = 0.0, dt = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      const double d = transition_direct(m[i], m[j]).value;
      dc = std::max(dc, std::abs(d - transition_char(chars[i], chars[j]).value));
      dt = std::max(dt, std::abs(d - transition_tomographic(toms[i], toms[j]).value));
    }

  double overlap_err = 0.0;
  DensityKernel vac = m[0];
  for (cplx alpha : {cplx(0.3, 0.0), cplx(0.8, 0.4), cplx(1.0, 0.5), cplx(1.5, 0.0), cplx(0.0, 1.2)}) {
    DensityKernel kc = pure_kernel(coherent_state(alpha, kRig));
    const double got = transition_direct(vac, kc).value;
    overlap_err = std::max(overlap_err, std::abs(got - std::exp(-std::norm(alpha))));
  }

  detail = std::string("calibration ") + (cal_ok ? "ok((2pi)^-1)" : "BAD") + ", |d-c| " + fmt(dc) +
           ", |d-t| " + fmt(dt) + ", vacuum overlap " + fmt(overlap_err);
  return cal_ok && dc < 1e-6 && dt < 5e-3 && overlap_err < 1e-7;
}

bool c8_sobolev_diagnostics(std::string& detail) {
  auto both_stable = [](const RegularityReport& r) {
    return r.verdict == RegularityVerdict::stable &&
           classify(r.fourier_side_estimates) == RegularityVerdict::stable;
  };
  RegularityReport vac = membership_report(pure_kernel(fock_state(0, kRig)).rho, 2.0, 3);
  RegularityReport exc = membership_report(pure_kernel(fock_state(4, kRig)).rho, 2.0, 3);
  RegularityReport box = membership_report(box_state(1.0, kRig).as_field(), 2.0, 3);

  // Fourier invariance: transformed kernels get the same verdicts
  const std::size_t dims[] = {0, 1};
  RegularityReport vac_ft =
      membership_report(continuous_ft(pure_kernel(fock_state(0, kRig)).rho, dims, -1), 2.0, 3);

  const bool ok = both_stable(vac) && both_stable(exc) && both_stable(vac_ft) &&
                  box.verdict == RegularityVerdict::diverging && box.growth_ratio > 1.5;
  detail = "vacuum " + std::string(to_string(vac.verdict)) + ", fock4 " + to_string(exc.verdict) +
           ", box " + to_string(box.verdict) + " (ratio " + fmt(box.growth_ratio) + ")";
  return ok;
}

bool c9_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "qtom_selftest_det";
  const fs::path d1 = base / "run1";
  const fs::path d2 = base / "run2";
  fs::remove_all(base);
  write_selftest_artifacts(d1);
  write_selftest_artifacts(d2);

  std::size_t files = 0;
  bool identical = true;
  for (const auto& entry : fs::directory_iterator(d1)) {
    ++files;
    std::ifstream a(entry.path(), std::ios::binary);
    std::ifstream b(d2 / entry.path().filename(), std::ios::binary);
    if (!b) {
      identical = false;
      break;
    }
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    if (sa != sb || sa.empty()) identical = false;
  }
  fs::remove_all(base);
  detail = std::to_string(files) + " artifacts compared";
  return identical && files >= 5;
}

}  // namespace

int run_acceptance(std::ostream& os) {
  Check ck{os};
  ck.criterion(1, "Fourier infrastructure (roundtrip, Plancherel, translation)", c1_ft_infrastructure);
  ck.criterion(2, "kernel -> char -> kernel roundtrip < 1e-6", c2_baker_roundtrip);
  ck.criterion(3, "three tomogram routes agree; normalization; angle symmetry", c3_route_equivalence);
  ck.criterion(4, "pure-state tomograms equal |frft psi|^2", c4_pure_state_tomograms);
  ck.criterion(5, "closed-form Gaussian oracles (tomogram, Wigner, 2 pi mass)", c5_gaussian_oracles);
  ck.criterion(6, "tomographic reconstruction < 1e-2 with unit trace", c6_reconstruction);
  ck.criterion(7, "transition probabilities: calibration and route agreement", c7_transition_probabilities);
  ck.criterion(8, "Sobolev diagnostics: stable kernels, diverging box", c8_sobolev_diagnostics);
  ck.criterion(9, "selftest artifacts are byte-identical across runs", c9_determinism);
  os << (ck.failures == 0 ? "acceptance: all criteria passed\n"
                          : "acceptance: " + std::to_string(ck.failures) + " criteria FAILED\n");
  return ck.failures;
}

void write_selftest_artifacts(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const Axis axis = make_axis(8.0, 128);
  PureState psi = fock_state(1, axis);
  write_qtf(dir / "fock1.qtf", psi.as_field());

  DensityKernel k = pure_kernel(psi);
  write_qtf(dir / "kernel.qtf", k.rho);

  CharFunction cf = char_from_kernel(k);
  write_qtf(dir / "char.qtf", cf.field);

  WignerFunction w = wigner_from_char(cf);
  write_qtf(dir / "wigner.qtf", w.field);

  Tomogram t = tomogram_from_char(cf, uniform_angles(16));
  write_qtg(dir / "tomogram.qtg", t);

  DensityKernel rec = kernel_from_tomogram(t);
  write_qtf(dir / "reconstructed.qtf", rec.rho);

  PureState rot = frft(psi, 0.7);
  write_qtf(dir / "frft.qtf", rot.as_field());
}

}  // namespace qtom
